//! Radicals: monomial, zero-dimensional (Seidenberg), and the general case by
//! localising at a maximal independent set, contracting, and recursing on the
//! remaining locus.

use crate::error::{Error, Result};
use crate::hilbert::hilbert;
use crate::ideal::ops::eliminate_in_place;
use crate::ideal::{intersect, minimalize, saturate_by_poly, Ideal};
use crate::poly::{Field, FieldScalar, Monomial, Polynomial, Ring, TermOrder};

pub const DEFAULT_DEPTH: usize = 16;

/// Squarefree parts of the minimal generators, re-minimalized.
pub fn radical_monomial(i: &Ideal) -> Result<Ideal> {
    let gens = i.minimal_monomials()?;
    let sq = minimalize(gens.iter().map(Monomial::squarefree_part).collect());
    Ok(Ideal::from_monomials(i.ring(), &sq))
}

/// Dense univariate polynomial, coefficient of `x^k` at index `k`.
type Dense = Vec<FieldScalar>;

fn dense_trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn dense_rem_quo(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = b[db].inv();
    let mut q = vec![b[0].field().zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &inv;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &(&c * bj);
        }
        q[k] = c;
        r = dense_trim(r);
    }
    (r, dense_trim(q))
}

fn dense_gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (r, _) = dense_rem_quo(&a, &b);
        a = b;
        b = r;
    }
    let inv = a.last().unwrap().inv();
    a.iter().map(|c| c * &inv).collect()
}

fn dense_derivative(a: &Dense) -> Dense {
    let field = a[0].field();
    dense_trim(a.iter().enumerate().skip(1).map(|(k, c)| c * &field.from_i64(k as i64)).collect())
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let field = a[0].field();
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    dense_trim(out)
}

/// Squarefree part over a field of characteristic 0 or a prime field.
fn dense_squarefree(f: &Dense) -> Dense {
    let field = f[0].field();
    if f.len() <= 1 {
        return vec![field.one()];
    }
    let df = dense_derivative(f);
    let p = field.characteristic() as usize;
    if df.is_empty() {
        // f = g(x^p); over F_p every coefficient is its own p-th root
        let g: Dense = f.iter().step_by(p).cloned().collect();
        return dense_squarefree(&g);
    }
    let g = dense_gcd(f, &df);
    let w = dense_rem_quo(f, &g).1;
    if p == 0 {
        return w;
    }
    // strip from g the factors already in w; what is left is a p-th power
    let mut rest = g;
    loop {
        let y = dense_gcd(&rest, &w);
        if y.len() <= 1 {
            break;
        }
        rest = dense_rem_quo(&rest, &y).1;
    }
    if rest.len() <= 1 {
        return w;
    }
    let root: Dense = rest.iter().step_by(p).cloned().collect();
    let extra = dense_squarefree(&root);
    dense_mul(&w, &extra)
}

fn to_dense(f: &Polynomial, v: usize) -> Dense {
    let field = f.ring().field();
    let d = f.degree_in(v).unwrap_or(0) as usize;
    let mut out = vec![field.zero(); d + 1];
    for t in f.terms() {
        out[t.mono.exp(v) as usize] = t.coeff.clone();
    }
    out
}

fn from_dense(ring: &Ring, v: usize, p: &Dense) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(ring, p.iter().enumerate().map(|(k, c)| (c.clone(), Monomial::var(n, v, k as u32))))
}

fn krull_dim(i: &Ideal) -> Result<Option<usize>> {
    Ok(hilbert(i)?.krull_dim)
}

/// Radical of a zero-dimensional ideal: add the squarefree part of the monic
/// generator of `I ∩ K[x_i]` for every variable.
pub fn radical_zero_dim(i: &Ideal) -> Result<Ideal> {
    match krull_dim(i)? {
        None => return Err(Error::UnitIdeal),
        Some(0) => {}
        Some(_) => return Err(Error::NotZeroDimensional),
    }
    let ring = i.ring();
    let n = ring.nvars();
    let mut extra = Vec::with_capacity(n);
    for v in 0..n {
        let others: Vec<usize> = (0..n).filter(|&j| j != v).collect();
        let univ = if others.is_empty() { i.default_gb().gens().to_vec() } else { eliminate_in_place(i, &others) };
        let f = univ
            .iter()
            .filter(|g| g.degree_in(v).unwrap_or(0) > 0)
            .min_by_key(|g| g.degree_in(v))
            .ok_or(Error::NotZeroDimensional)?;
        extra.push(from_dense(ring, v, &dense_squarefree(&to_dense(f, v))));
    }
    Ok(i.with_gens(&extra)?.reduced())
}

/// Greatest common divisor of two polynomials via `fg / lcm(f, g)`.
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    let cap = intersect(&Ideal::new(ring, vec![f.clone()])?, &Ideal::new(ring, vec![g.clone()])?)?;
    let gb = cap.default_gb();
    let lcm = gb.gens().first().ok_or_else(|| Error::Inconsistent("empty lcm".into()))?;
    (f * g)
        .div_exact(lcm)
        .map(|q| q.monic())
        .ok_or_else(|| Error::Inconsistent(format!("lcm {lcm} does not divide the product")))
}

/// Leading coefficients with respect to the block `v`: the coefficient of the
/// leading `v`-monomial, as a polynomial in the remaining variables.
fn block_leading_coeff(g: &Polynomial, v: &[usize]) -> Polynomial {
    let lead = g.leading_monomial().unwrap();
    let key: Vec<u32> = v.iter().map(|&i| lead.exp(i)).collect();
    let terms = g.terms().iter().filter(|t| v.iter().zip(&key).all(|(&i, &e)| t.mono.exp(i) == e)).map(|t| {
        let mut exps = t.mono.exps().to_vec();
        for &i in v {
            exps[i] = 0;
        }
        (t.coeff.clone(), Monomial::new(exps))
    });
    Polynomial::from_terms(g.ring(), terms)
}

/// Distinct non-constant leading `v`-coefficients of the reduced basis under elim(v).
fn localisation_factors(i: &Ideal, v: &[usize]) -> Vec<Polynomial> {
    let order = TermOrder::elim(v, i.ring().nvars());
    let gb = i.gb(&order);
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gb.gens() {
        let h = block_leading_coeff(g, v).reorder(i.ring()).monic();
        if !h.is_constant() && !out.contains(&h) {
            out.push(h);
        }
    }
    out
}

fn saturate_all(i: &Ideal, hs: &[Polynomial]) -> Result<Ideal> {
    let mut acc = i.clone();
    for h in hs {
        acc = saturate_by_poly(&acc, h)?;
    }
    Ok(acc)
}

/// A largest set of variables independent modulo the initial ideal (first in
/// lexicographic order of index sets).
pub fn max_independent_set(i: &Ideal, dim: usize) -> Vec<usize> {
    let init = i.gb(&TermOrder::DegRevLex).leading_monomials();
    let n = i.ring().nvars();
    let mut combo: Vec<usize> = (0..dim).collect();
    loop {
        let independent = init.iter().all(|m| m.support().any(|v| !combo.contains(&v)));
        if independent {
            return combo;
        }
        // next combination
        let mut k = dim;
        loop {
            if k == 0 {
                return Vec::new();
            }
            k -= 1;
            if combo[k] < n - dim + k {
                combo[k] += 1;
                for j in k + 1..dim {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Radical with the default recursion cap.
pub fn radical(i: &Ideal) -> Result<Ideal> {
    radical_with_depth(i, DEFAULT_DEPTH)
}

pub fn radical_with_depth(i: &Ideal, depth: usize) -> Result<Ideal> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    rad(i, depth, depth).map(|r| r.reduced())
}

fn is_linear_prime(i: &Ideal) -> bool {
    i.default_gb().gens().iter().all(|g| g.is_linear_form())
}

fn rad(i: &Ideal, depth: usize, cap: usize) -> Result<Ideal> {
    if i.is_unit() || i.is_zero() {
        return Ok(i.clone());
    }
    if i.is_monomial() {
        return radical_monomial(i);
    }
    if is_linear_prime(i) {
        return Ok(i.clone());
    }
    let Some(dim) = krull_dim(i)? else { return Ok(Ideal::unit(i.ring())) };
    if dim == 0 {
        return radical_zero_dim(i);
    }
    if depth == 0 {
        return Err(Error::RecursionLimit(cap));
    }
    if i.ring().field() != Field::Rational {
        return Err(Error::Unsupported(
            "positive-dimensional radicals need a perfect coefficient field; K(u) over F_p is not".into(),
        ));
    }
    let ring = i.ring();
    let n = ring.nvars();
    let u = max_independent_set(i, dim);
    let v: Vec<usize> = (0..n).filter(|x| !u.contains(x)).collect();
    let hs = localisation_factors(i, &v);
    let i1 = saturate_all(i, &hs)?;
    // squarefree parts over K(u) of one element of I1 ∩ K[u, v_j] per j
    let mut extra = Vec::with_capacity(v.len());
    for &vj in &v {
        let others: Vec<usize> = v.iter().copied().filter(|&x| x != vj).collect();
        let cands = if others.is_empty() { i1.default_gb().gens().to_vec() } else { eliminate_in_place(&i1, &others) };
        let Some(f) = cands.iter().filter(|g| g.degree_in(vj).unwrap_or(0) > 0).min_by_key(|g| (g.degree_in(vj), g.len())) else {
            return Err(Error::Inconsistent("localised ideal is not zero-dimensional".into()));
        };
        let g = poly_gcd(f, &f.derivative(vj))?;
        let sq = f.div_exact(&g).ok_or_else(|| Error::Inconsistent("gcd does not divide".into()))?;
        extra.push(sq);
    }
    let j = i1.with_gens(&extra)?;
    let hj = localisation_factors(&j, &v);
    let component = saturate_all(&j, &hj)?;
    if hs.is_empty() {
        return Ok(component);
    }
    let h = hs.iter().fold(Polynomial::one(ring), |acc, x| &acc * x);
    let rest = i.with_gens(&[h])?;
    if rest.is_unit() {
        return Ok(component);
    }
    let other = rad(&rest, depth - 1, cap)?;
    intersect(&component, &other)
}
