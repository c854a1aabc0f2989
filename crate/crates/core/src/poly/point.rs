use std::collections::BTreeMap;
use std::fmt;

use super::field::FieldScalar;
use super::linear::{linear_coeffs, row_to_form};
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::linalg;

/// Closed point `(p0 : ... : pn)` of the projective space of a ring.
#[derive(Clone)]
pub struct ClosedPoint {
    ring: Ring,
    coords: Vec<FieldScalar>,
    pivot: usize,
}

impl ClosedPoint {
    pub fn new(ring: &Ring, coords: Vec<FieldScalar>) -> Result<Self> {
        if coords.len() != ring.nvars() {
            return Err(Error::DimensionMismatch { expected: ring.nvars(), got: coords.len() });
        }
        if coords.iter().any(|c| !ring.field().contains(c)) {
            return Err(Error::InvalidPoint("coordinate outside the field".into()));
        }
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidPoint("all coordinates are zero".into()))?;
        Ok(ClosedPoint { ring: ring.clone(), coords, pivot })
    }

    pub fn from_ints(ring: &Ring, coords: &[i64]) -> Result<Self> {
        let field = ring.field();
        ClosedPoint::new(ring, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Coordinate point whose coordinates are 1 exactly at `support`.
    pub fn indicator(ring: &Ring, support: &[usize]) -> Result<Self> {
        let field = ring.field();
        let coords = (0..ring.nvars()).map(|i| if support.contains(&i) { field.one() } else { field.zero() }).collect();
        ClosedPoint::new(ring, coords)
    }

    /// Point cut out by `n` linearly independent linear forms.
    pub fn from_forms(ring: &Ring, forms: &[Polynomial]) -> Result<Self> {
        let rows = forms.iter().map(linear_coeffs).collect::<Result<Vec<_>>>()?;
        let ns = linalg::nullspace(&rows, ring.nvars(), ring.field());
        if ns.len() != 1 {
            return Err(Error::InvalidPoint(format!("forms cut out a space of dimension {}", ns.len() as i64 - 1)));
        }
        ClosedPoint::new(ring, ns.into_iter().next().unwrap())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coords(&self) -> &[FieldScalar] {
        &self.coords
    }

    /// Least index with a nonzero coordinate.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// Coordinates scaled so the pivot coordinate is 1.
    pub fn normalized(&self) -> Vec<FieldScalar> {
        let inv = self.coords[self.pivot].inv();
        self.coords.iter().map(|c| c * &inv).collect()
    }

    /// The forms `x_j - (p_j / p_l) x_l` for `j != l`, keyed by `j`.
    pub fn forms(&self) -> BTreeMap<usize, Polynomial> {
        let n = self.ring.nvars();
        let l = self.pivot;
        let norm = self.normalized();
        (0..n)
            .filter(|&j| j != l)
            .map(|j| {
                let mut terms = vec![(self.ring.field().one(), Monomial::var(n, j, 1))];
                if !norm[j].is_zero() {
                    terms.push((-&norm[j], Monomial::var(n, l, 1)));
                }
                (j, Polynomial::from_terms(&self.ring, terms))
            })
            .collect()
    }

    pub fn ideal_generators(&self) -> Vec<Polynomial> {
        self.forms().into_values().collect()
    }

    /// Linear forms vanishing at every given point (a basis of that space).
    pub fn common_forms(points: &[&ClosedPoint]) -> Result<Vec<Polynomial>> {
        let ring = points.first().ok_or_else(|| Error::InvalidPoint("no points".into()))?.ring().clone();
        let rows: Vec<Vec<FieldScalar>> = points.iter().map(|p| p.coords.clone()).collect();
        let ns = linalg::nullspace(&rows, ring.nvars(), ring.field());
        Ok(ns.iter().map(|row| row_to_form(&ring, row)).collect())
    }

    /// Does the homogeneous polynomial `f` vanish here?
    pub fn vanishes(&self, f: &Polynomial) -> Result<bool> {
        Ok(f.evaluate(&self.coords)?.is_zero())
    }
}

impl PartialEq for ClosedPoint {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.pivot == other.pivot && self.normalized() == other.normalized()
    }
}

impl Eq for ClosedPoint {}

impl fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Debug for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn forms_vanish_and_are_independent() {
        let r = PolyRing::standard(3, Field::Rational);
        let p = ClosedPoint::from_ints(&r, &[0, 2, -1, 3]).unwrap();
        assert_eq!(p.pivot(), 1);
        let forms = p.ideal_generators();
        assert_eq!(forms.len(), 3);
        for f in &forms {
            assert!(p.vanishes(f).unwrap());
        }
        let rows: Vec<_> = forms.iter().map(|f| linear_coeffs(f).unwrap()).collect();
        assert_eq!(linalg::rank(&rows), 3);
        assert_eq!(ClosedPoint::from_forms(&r, &forms).unwrap(), p);
    }

    #[test]
    fn equality_up_to_scalar() {
        let r = PolyRing::standard(2, Field::Rational);
        let a = ClosedPoint::from_ints(&r, &[1, 2, 3]).unwrap();
        let b = ClosedPoint::from_ints(&r, &[-2, -4, -6]).unwrap();
        assert_eq!(a, b);
        assert!(ClosedPoint::from_ints(&r, &[0, 0, 0]).is_err());
    }
}
