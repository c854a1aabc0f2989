//! Exact linear algebra over a [`Field`]: dense reduced row echelon forms and an
//! incremental sparse echelon basis.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::{Field, FieldScalar};

pub type Matrix = Vec<Vec<FieldScalar>>;

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        let d = &f * &m[r][j];
                        m[i][j] = &m[i][j] - &d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

pub fn identity(n: usize, field: Field) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect()
}

pub fn inverse(m: &Matrix, field: Field) -> Result<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(identity(n, field))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix, field: Field) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = field.zero();
                    for t in 0..k {
                        if !a[i][t].is_zero() && !b[t][j].is_zero() {
                            acc = &acc + &(&a[i][t] * &b[t][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Basis of `{v | m v = 0}`.
pub fn nullspace(m: &Matrix, ncols: usize, field: Field) -> Matrix {
    let mut c = m.clone();
    let pivots = rref(&mut c);
    let free: Vec<usize> = (0..ncols).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (row, &p) in c.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Sparse vector: (column, nonzero value) sorted by column.
pub type SparseRow = Vec<(usize, FieldScalar)>;

/// Incrementally built row echelon basis; every stored row is monic at a
/// distinct leading column.
#[derive(Debug, Default)]
pub struct SparseEchelon {
    rows: HashMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        SparseEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut i = 0;
        while i < row.len() {
            let (col, ref val) = row[i];
            if let Some(p) = self.rows.get(&col) {
                let f = val.clone();
                row = axpy(&row, &f, p);
                // entries before i are untouched: pivot rows start at `col`
            } else {
                i += 1;
            }
        }
        row
    }

    /// Insert a vector; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce_leading(row);
        match row.first() {
            None => false,
            Some((lead, v)) => {
                let inv = v.inv();
                let lead = *lead;
                let row: SparseRow = row.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
                self.rows.insert(lead, row);
                true
            }
        }
    }

    /// Reduce only until the leading entry has no pivot.
    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some((col, val)) = row.first() {
            match self.rows.get(col) {
                Some(p) => {
                    let f = val.clone();
                    row = axpy(&row, &f, p);
                }
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Stored rows, sorted by leading column.
    pub fn rows(&self) -> Vec<&SparseRow> {
        let mut keys: Vec<&usize> = self.rows.keys().collect();
        keys.sort();
        keys.into_iter().map(|k| &self.rows[k]).collect()
    }
}

/// `row - f * pivot`.
fn axpy(row: &SparseRow, f: &FieldScalar, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -&(f * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(f * &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
