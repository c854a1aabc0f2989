//! Coefficients, monomials, term orders, sparse polynomials, linear changes of
//! coordinates and closed points.

mod field;
mod linear;
mod monomial;
mod order;
mod parse;
mod point;
mod polynomial;
mod ring;

pub use field::{Field, FieldScalar};
pub use linear::{linear_coeffs, row_to_form, LinearMap};
pub use monomial::{count_monomials, monomials_of_degree, Monomial};
pub use order::TermOrder;
pub use parse::parse_polynomial;
pub use point::ClosedPoint;
pub use polynomial::{Polynomial, Term};
pub(crate) use polynomial::merge as merge_terms;
pub use ring::{PolyRing, Ring};

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// `compare_monomials` with a dimension check.
pub fn compare_monomials(order: &TermOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch { expected: a.nvars(), got: b.nvars() });
    }
    if let TermOrder::Elim(mask) = order {
        if mask.len() != a.nvars() {
            return Err(Error::DimensionMismatch { expected: mask.len(), got: a.nvars() });
        }
    }
    Ok(order.compare(a, b))
}

/// Parse a comma separated list of polynomials.
pub fn parse_polynomials(text: &str, ring: &Ring) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        if part.trim().is_empty() {
            offset += part.len() + 1;
            continue;
        }
        out.push(parse_polynomial(part, ring).map_err(|e| match e {
            Error::Syntax { position, message } => Error::Syntax { position: position + offset, message },
            other => other,
        })?);
        offset += part.len() + 1;
    }
    Ok(out)
}
