//! Hilbert series of monomial ideals, Hilbert polynomials, dimension and
//! multiplicity of graded quotients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{minimalize, Ideal};
use crate::poly::{Monomial, TermOrder};

/// Univariate integer polynomial, coefficient of `t^k` at index `k`.
pub type Series = Vec<BigInt>;

fn trim(mut p: Series) -> Series {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn sub_shifted(a: &Series, b: &Series, shift: usize) -> Series {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    trim(out)
}

fn mul(a: &Series, b: &Series) -> Series {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn one_minus_t_pow(d: u32) -> Series {
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = BigInt::one();
    p[d as usize] -= BigInt::one();
    trim(p)
}

fn numerator_rec(gens: Vec<Monomial>) -> Series {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![BigInt::one()], |acc, m| mul(&acc, &one_minus_t_pow(m.degree())));
    }
    // pivot x_v^e: v most frequent in the supports of mixed generators
    let n = gens[0].nvars();
    let mixed: Vec<&Monomial> = gens.iter().filter(|m| m.support().count() > 1).collect();
    let mut freq = vec![0usize; n];
    for m in &mixed {
        for v in m.support() {
            freq[v] += 1;
        }
    }
    let v = (0..n).max_by(|&a, &b| freq[a].cmp(&freq[b]).then(b.cmp(&a))).unwrap();
    let e = mixed.iter().filter(|m| m.exp(v) > 0).map(|m| m.exp(v)).min().unwrap();
    let pivot = Monomial::var(n, v, e);
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| !pivot.divides(m)).cloned().collect();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|m| pivot.gcd(m).quotient_of(m).unwrap()).collect();
    let a = numerator_rec(minimalize(plus));
    let b = numerator_rec(minimalize(colon));
    // HS(R/I) = HS(R/(I + m)) + t^deg(m) HS(R/(I : m))
    sub_shifted(&a, &b.iter().map(|c| -c).collect(), e as usize)
}

/// Numerator of the Hilbert series of `R/I` over `(1-t)^nvars`, for a monomial ideal.
pub fn hilbert_numerator(i: &Ideal) -> Result<Series> {
    let gens = i.minimal_monomials()?;
    Ok(numerator_rec(gens))
}

/// Hilbert data of a graded quotient `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator over `(1-t)^nvars`.
    pub numerator: Series,
    pub nvars: usize,
    /// Numerator after cancelling every factor `(1-t)`.
    pub reduced_numerator: Series,
    /// Krull dimension of `R/I`; `None` for the unit ideal (empty scheme).
    pub krull_dim: Option<usize>,
    /// Hilbert polynomial in `s`, coefficient of `s^k` at index `k`.
    pub hilbert_polynomial: Vec<BigRational>,
    pub e0: u64,
}

impl HilbertData {
    pub fn from_numerator(numerator: Series, nvars: usize) -> Result<Self> {
        if numerator.is_empty() {
            return Ok(HilbertData {
                numerator,
                nvars,
                reduced_numerator: Vec::new(),
                krull_dim: None,
                hilbert_polynomial: Vec::new(),
                e0: 0,
            });
        }
        let mut q = numerator.clone();
        let mut d = nvars;
        while d > 0 && q.iter().sum::<BigInt>().is_zero() {
            q = divide_one_minus_t(&q);
            d -= 1;
        }
        let e = q.iter().sum::<BigInt>();
        if e.is_negative() {
            return Err(Error::Inconsistent(format!("negative multiplicity {e}")));
        }
        let e0 = e.to_u64().ok_or_else(|| Error::Inconsistent("multiplicity overflow".into()))?;
        let hp = hilbert_polynomial(&q, d);
        Ok(HilbertData { numerator, nvars, reduced_numerator: q, krull_dim: Some(d), hilbert_polynomial: hp, e0 })
    }

    pub fn is_empty_ring(&self) -> bool {
        self.krull_dim.is_none()
    }

    /// Dimension of the projective scheme, `None` when it is empty.
    pub fn proj_dim(&self) -> Option<usize> {
        match self.krull_dim {
            Some(d) if d > 0 => Some(d - 1),
            _ => None,
        }
    }

    /// Exact value of the Hilbert function in degree `s`.
    pub fn hilbert_function(&self, s: u64) -> BigInt {
        let Some(d) = self.krull_dim else { return BigInt::zero() };
        if d == 0 {
            return self.reduced_numerator.get(s as usize).cloned().unwrap_or_default();
        }
        let mut acc = BigInt::zero();
        for (k, c) in self.reduced_numerator.iter().enumerate() {
            let k = k as u64;
            if k > s {
                break;
            }
            acc += c * binomial(s - k + d as u64 - 1, d as u64 - 1);
        }
        acc
    }

    pub fn eval_hilbert_polynomial(&self, s: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(s));
        let mut acc = BigRational::zero();
        for c in self.hilbert_polynomial.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Degree after which the Hilbert function agrees with the polynomial.
    pub fn regularity_bound(&self) -> i64 {
        self.reduced_numerator.len() as i64 - self.krull_dim.unwrap_or(0) as i64
    }
}

fn binomial(a: u64, b: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..b {
        num *= BigInt::from(a - j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

fn divide_one_minus_t(q: &Series) -> Series {
    // q = (1 - t) r  =>  r_k = q_0 + ... + q_k
    let mut r = Vec::with_capacity(q.len());
    let mut acc = BigInt::zero();
    for c in q.iter().take(q.len().saturating_sub(1)) {
        acc += c;
        r.push(acc.clone());
    }
    trim(r)
}

fn hilbert_polynomial(q: &Series, d: usize) -> Vec<BigRational> {
    if d == 0 {
        return Vec::new();
    }
    let mut fact = BigInt::one();
    for j in 1..d {
        fact *= BigInt::from(j);
    }
    let mut out = vec![BigRational::zero(); d];
    for (k, c) in q.iter().enumerate() {
        // C(s - k + d - 1, d - 1) = prod_{j=1}^{d-1} (s - k + j) / (d-1)!
        let mut poly = vec![BigRational::one()];
        for j in 1..d {
            let shift = BigRational::from_integer(BigInt::from(j as i64 - k as i64));
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (i, a) in poly.iter().enumerate() {
                next[i + 1] += a;
                next[i] += a * &shift;
            }
            poly = next;
        }
        for (i, a) in poly.into_iter().enumerate() {
            out[i] += a * BigRational::from_integer(c.clone()) / BigRational::from_integer(fact.clone());
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Hilbert data of `R/I` through the initial ideal under `order`.
pub fn hilbert_data(i: &Ideal, order: &TermOrder) -> Result<HilbertData> {
    let init = i.initial_ideal(order);
    HilbertData::from_numerator(hilbert_numerator(&init)?, i.ring().nvars())
}

/// Hilbert data under degrevlex.
pub fn hilbert(i: &Ideal) -> Result<HilbertData> {
    hilbert_data(i, &TermOrder::DegRevLex)
}

/// `e0(R/(I_X + I_Y))` when the intersection is finite; 0 when it is empty.
pub fn intersection_length(x: &Ideal, y: &Ideal) -> Result<u64> {
    let sum = x.sum(y)?;
    let h = hilbert(&sum)?;
    match h.krull_dim {
        None | Some(0) => Ok(0),
        Some(1) => Ok(h.e0),
        Some(d) => Err(Error::PositiveDimensional(d - 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn numerators() {
        let r = PolyRing::with_names(&["x"], Field::Rational).unwrap();
        assert_eq!(hilbert_numerator(&Ideal::zero(&r)).unwrap(), vec![BigInt::one()]);
        let n = hilbert_numerator(&Ideal::parse(&r, "x^2").unwrap()).unwrap();
        assert_eq!(n, vec![BigInt::one(), BigInt::zero(), -BigInt::one()]);
    }

    #[test]
    fn regular_sequence() {
        let r = PolyRing::with_names(&["x1", "x2", "x3", "x4"], Field::Rational).unwrap();
        let i = Ideal::parse(&r, "x2^2, x3, x4").unwrap();
        let expected = mul(&one_minus_t_pow(2), &mul(&one_minus_t_pow(1), &one_minus_t_pow(1)));
        assert_eq!(hilbert_numerator(&i).unwrap(), expected);
        let h = hilbert(&i).unwrap();
        assert_eq!((h.krull_dim, h.e0), (Some(1), 2));
    }

    #[test]
    fn hilbert_function_matches_polynomial() {
        let r = PolyRing::standard(3, Field::Rational);
        let i = Ideal::parse(&r, "x0*x2-x1^2, x1*x3-x2^2, x0*x3-x1*x2").unwrap();
        let h = hilbert(&i).unwrap();
        assert_eq!((h.krull_dim, h.e0), (Some(2), 3));
        for s in 0..8 {
            assert_eq!(h.hilbert_function(s), BigInt::from(3 * s + 1));
            assert_eq!(h.eval_hilbert_polynomial(s as i64), BigRational::from_integer(BigInt::from(3 * s + 1)));
        }
    }

    #[test]
    fn zero_dimensional_length() {
        let r = PolyRing::standard(1, Field::Rational);
        let h = hilbert(&Ideal::parse(&r, "x0^2, x0*x1, x1^3").unwrap()).unwrap();
        assert_eq!((h.krull_dim, h.e0), (Some(0), 4));
        let total: BigInt = (0..6).map(|s| h.hilbert_function(s)).sum();
        assert_eq!(total, BigInt::from(4));
    }

    #[test]
    fn unit_ideal_is_empty() {
        let r = PolyRing::standard(1, Field::Rational);
        let h = hilbert(&Ideal::unit(&r)).unwrap();
        assert!(h.is_empty_ring());
    }
}
