//! Exact coefficient fields: the rationals and prime fields F_q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which field the coefficients of a ring live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Prime field of the given characteristic (a prime below 2^31).
    Prime(u32),
}

impl Field {
    pub fn prime(q: u32) -> Result<Self> {
        if q < 2 || q >= (1 << 31) || !is_prime(q) {
            return Err(Error::InvalidField(format!("{q} is not a prime below 2^31")));
        }
        Ok(Field::Prime(q))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(q) => *q,
        }
    }

    pub fn zero(&self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(q) => {
                let r = v.rem_euclid(*q as i64) as u32;
                FieldScalar::Modular { value: r, modulus: *q }
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(q) => {
                let m = BigInt::from(*q);
                let r = v.mod_floor(&m);
                let value: u32 = r.try_into().expect("residue fits in u32");
                FieldScalar::Modular { value, modulus: *q }
            }
        }
    }

    /// `num/den` as a field element; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<FieldScalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::CoefficientNotInField(format!("{num}/{den}")));
        }
        Ok(self.from_bigint(num) * d.inv())
    }

    pub fn contains(&self, c: &FieldScalar) -> bool {
        match (self, c) {
            (Field::Rational, FieldScalar::Rational(_)) => true,
            (Field::Prime(q), FieldScalar::Modular { modulus, .. }) => q == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(q) => write!(f, "Fp {q}"),
        }
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q as u64 {
        if q as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Rationals are kept in lowest terms with a
/// positive denominator; residues are always reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rational,
            FieldScalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Modular { value, .. } => *value == 1,
        }
    }

    /// True for rationals with negative sign. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_negative(),
            FieldScalar::Modular { .. } => false,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> FieldScalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Modular { value, modulus } => {
                let inv = pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64);
                FieldScalar::Modular { value: inv as u32, modulus: *modulus }
            }
        }
    }

    pub fn pow(&self, e: u64) -> FieldScalar {
        match self {
            FieldScalar::Rational(r) => {
                let mut acc = BigRational::one();
                for _ in 0..e {
                    acc *= r;
                }
                FieldScalar::Rational(acc)
            }
            FieldScalar::Modular { value, modulus } => FieldScalar::Modular {
                value: pow_mod(*value as u64, e, *modulus as u64) as u32,
                modulus: *modulus,
            },
        }
    }

    /// Denominator of a rational (1 for residues).
    pub fn denominator(&self) -> BigInt {
        match self {
            FieldScalar::Rational(r) => r.denom().clone(),
            FieldScalar::Modular { .. } => BigInt::one(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldScalar::Rational(r) => Some(r),
            FieldScalar::Modular { .. } => None,
        }
    }

    fn check(&self, other: &FieldScalar) {
        debug_assert_eq!(self.field(), other.field(), "field mismatch");
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldScalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        self.check(rhs);
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Modular { value: a, modulus }, FieldScalar::Modular { value: b, .. }) => {
                FieldScalar::Modular {
                    value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl<'a> Sub<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        self.check(rhs);
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Modular { value: a, modulus }, FieldScalar::Modular { value: b, .. }) => {
                FieldScalar::Modular {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Modular { value, modulus } => FieldScalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl Add for FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: FieldScalar) -> FieldScalar {
        &self + &rhs
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: FieldScalar) -> FieldScalar {
        &self - &rhs
    }
}

impl Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: FieldScalar) -> FieldScalar {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let q = Field::Rational;
        let a = q.from_fraction(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        let r = a.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(q.zero().as_rational().unwrap().denom().is_one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, f.from_i64(6));
        assert_eq!(&a * &a.inv(), f.one());
        assert_eq!(&f.from_i64(3) + &f.from_i64(5), f.from_i64(1));
        assert!(f.from_fraction(&BigInt::from(1), &BigInt::from(14)).is_err());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(91).is_err());
        assert!(Field::prime(32003).is_ok());
    }
}
