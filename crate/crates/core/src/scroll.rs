//! Rational normal scrolls and the secant variety of `S(1, 8)` as determinantal ideals.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

/// Columns `(x_j ; x_{j+1})` of the 2-row matrix of `S(a_1, ..., a_r)`, block by block.
pub fn scroll_columns(degrees: &[usize]) -> Vec<(usize, usize)> {
    let mut cols = Vec::new();
    let mut start = 0;
    for &a in degrees {
        for j in 0..a {
            cols.push((start + j, start + j + 1));
        }
        start += a + 1;
    }
    cols
}

/// Number of variables of the ambient space of `S(a_1, ..., a_r)`.
pub fn scroll_nvars(degrees: &[usize]) -> usize {
    degrees.iter().map(|a| a + 1).sum()
}

/// The 2x2 minors of the scroll matrix, in `ring` (which must have enough variables).
pub fn scroll_ideal(ring: &Ring, degrees: &[usize]) -> Result<Ideal> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::Precondition("scroll degrees must be positive".into()));
    }
    let need = scroll_nvars(degrees);
    if ring.nvars() != need {
        return Err(Error::DimensionMismatch { expected: need, got: ring.nvars() });
    }
    let cols = scroll_columns(degrees);
    let x = |i: usize| Polynomial::var(ring, i);
    let mut gens = Vec::new();
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            let (p, q) = (cols[a], cols[b]);
            gens.push(x(p.0).try_mul(&x(q.1))?.try_sub(&x(q.0).try_mul(&x(p.1))?)?);
        }
    }
    Ideal::new(ring, gens)
}

/// 3x3 minors of the Hankel matrix with `cols` columns and rows starting at
/// `x_s`, `x_{s+1}`, `x_{s+2}`.
pub fn hankel_minors(ring: &Ring, start: usize, cols: usize) -> Result<Ideal> {
    if start + cols + 1 >= ring.nvars() {
        return Err(Error::DimensionMismatch { expected: start + cols + 2, got: ring.nvars() });
    }
    let entry = |r: usize, c: usize| Polynomial::var(ring, start + r + c);
    let mut gens = Vec::new();
    for a in 0..cols {
        for b in a + 1..cols {
            for c in b + 1..cols {
                let m = [a, b, c];
                let mut det = Polynomial::zero(ring);
                for (perm, sign) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)] {
                    let t = entry(0, m[perm[0]]).try_mul(&entry(1, m[perm[1]]))?.try_mul(&entry(2, m[perm[2]]))?;
                    det = if sign > 0 { det.try_add(&t)? } else { det.try_sub(&t)? };
                }
                gens.push(det);
            }
        }
    }
    Ideal::new(ring, gens)
}

/// The secant variety of `S(1, 8)` in `P^10`: 3x3 minors of the Hankel matrix on `x2..x10`.
pub fn scroll_1_8_secant(ring: &Ring) -> Result<Ideal> {
    hankel_minors(ring, 2, 7)
}
