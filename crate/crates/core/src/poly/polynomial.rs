use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::FieldScalar;
use super::monomial::Monomial;
use super::order::TermOrder;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldScalar,
    pub mono: Monomial,
}

/// Sparse polynomial: nonzero terms sorted strictly descending in the ring's order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: FieldScalar) -> Self {
        Polynomial::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial::monomial(ring, ring.field().one(), Monomial::var(ring.nvars(), i, 1))
    }

    pub fn monomial(ring: &Ring, c: FieldScalar, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { coeff: c, mono: m }] }
    }

    /// Build from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (FieldScalar, Monomial)>) -> Self {
        let mut raw: Vec<Term> = terms.into_iter().map(|(coeff, mono)| Term { coeff, mono }).collect();
        let order = ring.order().clone();
        raw.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = &last.coeff + &t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Terms already sorted and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&FieldScalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every term has degree one.
    pub fn is_linear_form(&self) -> bool {
        !self.terms.is_empty() && self.terms.iter().all(|t| t.mono.degree() == 1)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exp(i) > 0)
    }

    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for t in &self.terms {
            for i in t.mono.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    fn assert_compatible(&self, other: &Polynomial) {
        assert!(
            self.ring.compatible(&other.ring) && self.ring.order() == other.ring.order(),
            "polynomials from different rings"
        );
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.ring.compatible(&other.ring) && self.ring.order() == other.ring.order() {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring.names(), other.ring.names())))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &FieldScalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`; the order is multiplicative so sorting is kept.
    pub fn mul_term(&self, c: &FieldScalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.mul(m) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self - c * m * g`, the reduction step.
    pub fn sub_mul_term(&self, c: &FieldScalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let neg = -c;
        let scaled = g.terms.iter().map(|t| Term { coeff: &t.coeff * &neg, mono: t.mono.mul(m) });
        Polynomial { ring: self.ring.clone(), terms: merge(&self.terms, scaled, self.ring.order()) }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-sort under the order of `ring`, which must have the same variables.
    pub fn reorder(&self, ring: &Ring) -> Polynomial {
        debug_assert!(self.ring.compatible(ring));
        if self.ring.order() == ring.order() {
            return Polynomial { ring: ring.clone(), terms: self.terms.clone() };
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn evaluate(&self, point: &[FieldScalar]) -> Result<FieldScalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        let field = self.ring.field();
        let mut acc = field.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    v = &v * &point[i].pow(e as u64);
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.exp(var)).max()
    }

    /// Degree in `var` and the coefficient of its top power (which is `var`-free).
    pub fn leading_data_in_var(&self, var: usize) -> Result<(u32, Polynomial)> {
        let d = self.degree_in(var).ok_or(Error::ZeroPolynomial)?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter(|t| t.mono.exp(var) == d)
            .map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.without_var(var) })
            .collect();
        // stripping one variable from terms of equal var-degree keeps them sorted
        // for every order used here, but re-sort to stay safe under lex-like orders.
        Ok((d, Polynomial::from_terms(&self.ring, terms.into_iter().map(|t| (t.coeff, t.mono)))))
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().filter(|t| t.mono.exp(var) > 0).map(|t| {
            let e = t.mono.exp(var);
            let mut exps = t.mono.exps().to_vec();
            exps[var] -= 1;
            (&t.coeff * &field.from_i64(e as i64), Monomial::new(exps))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitute `images[i]` for the i-th variable; images live in `target`.
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut acc: Vec<(FieldScalar, Monomial)> = Vec::new();
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e as usize];
            }
            acc.extend(prod.terms.into_iter().map(|t| (t.coeff, t.mono)));
        }
        Polynomial::from_terms(target, acc)
    }

    /// Move into `target` by placing variable i at `positions[i]`.
    pub fn scatter_into(&self, target: &Ring, positions: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|t| (t.coeff.clone(), t.mono.scatter(positions, target.nvars())));
        Polynomial::from_terms(target, terms)
    }

    /// Restrict to the variables at `positions`; fails if another variable occurs.
    pub fn gather_into(&self, target: &Ring, positions: &[usize]) -> Option<Polynomial> {
        let mut keep = vec![false; self.ring.nvars()];
        for &p in positions {
            keep[p] = true;
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.mono.support().any(|i| !keep[i]) {
                return None;
            }
            out.push((t.coeff.clone(), t.mono.select(positions)));
        }
        Some(Polynomial::from_terms(target, out))
    }

    /// Exact division by a nonzero `divisor`; `None` when it does not divide.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.assert_compatible(divisor);
        let lt = divisor.leading_term()?;
        let inv = lt.coeff.inv();
        let mut rem = self.clone();
        let mut quot: Vec<(FieldScalar, Monomial)> = Vec::new();
        while let Some(t) = rem.leading_term() {
            let m = lt.mono.quotient_of(&t.mono)?;
            let c = &t.coeff * &inv;
            rem = rem.sub_mul_term(&c, &m, divisor);
            quot.push((c, m));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Display with the ring's variable names.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

/// Merge two descending term sequences, adding coefficients of equal monomials.
pub(crate) fn merge(a: &[Term], b: impl Iterator<Item = Term>, order: &TermOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + 4);
    let mut ia = a.iter().peekable();
    let mut ib = b.peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ia.next().unwrap().clone()),
            (None, Some(_)) => out.push(ib.next().unwrap()),
            (Some(x), Some(y)) => match order.compare(&x.mono, &y.mono) {
                Ordering::Greater => out.push(ia.next().unwrap().clone()),
                Ordering::Less => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let x = ia.next().unwrap();
                    let y = ib.next().unwrap();
                    let c = &x.coeff + &y.coeff;
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: y.mono });
                    }
                }
            },
        }
    }
    out
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let terms = merge(&self.terms, rhs.terms.iter().cloned(), self.ring.order());
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let neg = rhs.terms.iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() });
        let terms = merge(&self.terms, neg, self.ring.order());
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            let part = large.mul_term(&t.coeff, &t.mono);
            acc = &acc + &part;
        }
        acc
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-self.ring.field().one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { -&t.coeff } else { t.coeff.clone() };
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || t.mono.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in t.mono.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
