use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::{Monomial, PolyRing, Polynomial, Ring, TermOrder};

use super::{Ideal, SubringEmbedding};

/// `I ∩ K[remaining variables]`, as an ideal of the subring (degrevlex).
pub fn eliminate(i: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = i.ring();
    let emb = SubringEmbedding::dropping(ring, drop)?;
    if drop.is_empty() {
        return i.in_ring(emb.sub());
    }
    let gb = i.gb(&TermOrder::elim(drop, ring.nvars()));
    let kept: Vec<Polynomial> = gb.gens().iter().filter_map(|g| emb.restrict(g)).collect();
    let out = Ideal::new(emb.sub(), kept.clone())?;
    // the drop-free part of a reduced elimination basis is the reduced basis of
    // the contraction under the induced degrevlex order
    out.seed_gb(GroebnerBasis::from_reduced(emb.sub(), kept));
    Ok(out)
}

/// Elements of `I` free of `drop`, kept in the ring of `I`.
pub(crate) fn eliminate_in_place(i: &Ideal, drop: &[usize]) -> Vec<Polynomial> {
    let ring = i.ring();
    let gb = i.gb(&TermOrder::elim(drop, ring.nvars()));
    gb.gens().iter().filter(|g| drop.iter().all(|&v| !g.uses_var(v))).map(|g| g.reorder(ring)).collect()
}

/// Ring with one extra variable `t` placed last, and the positions of the old variables.
fn with_fresh_var(ring: &Ring, order: impl FnOnce(usize) -> TermOrder) -> Result<(Ring, Vec<usize>)> {
    let n = ring.nvars();
    let ext = ring.extended(&["t"], order(n + 1))?;
    Ok((ext, (0..n).collect()))
}

pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if !a.ring().compatible(b.ring()) {
        return Err(Error::RingMismatch("intersection of ideals in different rings".into()));
    }
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if b.contains_ideal(a) {
        return Ok(a.clone());
    }
    if a.contains_ideal(b) {
        return b.in_ring(ring);
    }
    let n = ring.nvars();
    let (ext, pos) = with_fresh_var(ring, |m| TermOrder::elim(&[n], m))?;
    let t = Polynomial::var(&ext, n);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(&t * &f.scatter_into(&ext, &pos));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.scatter_into(&ext, &pos));
    }
    let big = Ideal::new(&ext, gens)?;
    let kept = eliminate_in_place(&big, &[n]);
    Ideal::new(ring, kept.iter().map(|g| g.gather_into(ring, &pos).unwrap()).collect())
}

pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals.split_first().ok_or(Error::ZeroIdeal)?;
    let mut acc = first.clone();
    for j in rest {
        acc = intersect(&acc, j)?;
    }
    Ok(acc)
}

/// Ring with the variables permuted so that `v` comes last (degrevlex), and the
/// forward and backward position maps.
fn var_last_ring(ring: &Ring, v: usize) -> Result<(Ring, Vec<usize>, Vec<usize>)> {
    let n = ring.nvars();
    let order: Vec<usize> = (0..n).filter(|&i| i != v).chain(std::iter::once(v)).collect();
    let names = order.iter().map(|&i| ring.name(i).to_string()).collect();
    let permuted = PolyRing::new(names, ring.field(), TermOrder::DegRevLex)?;
    let mut forward = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        forward[old] = new;
    }
    Ok((permuted, forward, order))
}

fn divide_by_var_power(f: &Polynomial, v: usize, e: u32) -> Polynomial {
    let terms = f.terms().iter().map(|t| {
        let mut exps = t.mono.exps().to_vec();
        exps[v] -= e;
        (t.coeff.clone(), Monomial::new(exps))
    });
    Polynomial::from_terms(f.ring(), terms)
}

/// `I : x_v` (or `I : x_v^∞`) for homogeneous `I`: in degrevlex with `x_v`
/// smallest, dividing a reduced basis by `x_v` gives a basis of the quotient.
fn var_quotient(i: &Ideal, v: usize, infinite: bool) -> Result<Ideal> {
    let ring = i.ring();
    let (perm, forward, back) = var_last_ring(ring, v)?;
    let last = ring.nvars() - 1;
    let moved = Ideal::new(&perm, i.gens().iter().map(|g| g.scatter_into(&perm, &forward)).collect())?;
    let gb = moved.gb(&TermOrder::DegRevLex);
    let gens = gb
        .gens()
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|t| t.mono.exp(last)).min().unwrap_or(0);
            let e = if infinite { k } else { k.min(1) };
            let q = if e > 0 { divide_by_var_power(g, last, e) } else { g.clone() };
            q.scatter_into(ring, &back)
        })
        .collect();
    Ideal::new(ring, gens)
}

/// `I : f`.
pub fn quotient_by(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    if f.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if f.is_constant() || i.is_zero() {
        return Ok(i.clone());
    }
    let f = f.reorder(ring);
    if f.is_monomial() && i.is_homogeneous() {
        let m = f.leading_monomial().unwrap().clone();
        let mut acc = i.clone();
        for v in m.support() {
            for _ in 0..m.exp(v) {
                acc = var_quotient(&acc, v, false)?;
            }
        }
        return Ok(acc);
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let cap = intersect(i, &principal)?;
    let gens = cap
        .gens()
        .iter()
        .map(|g| g.div_exact(&f).ok_or_else(|| Error::Inconsistent(format!("{f} does not divide {g}"))))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `I : J`, intersecting the quotients by the generators of `J`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !i.ring().compatible(j.ring()) {
        return Err(Error::RingMismatch("quotient of ideals in different rings".into()));
    }
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let parts = j.gens().iter().map(|g| quotient_by(i, g)).collect::<Result<Vec<_>>>()?;
    intersect_chain(parts)
}

/// Intersection of ideals that all contain a common ideal; skips comparable pairs.
fn intersect_chain(parts: Vec<Ideal>) -> Result<Ideal> {
    let mut it = parts.into_iter();
    let mut acc = it.next().ok_or(Error::ZeroIdeal)?;
    for p in it {
        acc = intersect(&acc, &p)?;
    }
    Ok(acc)
}

/// Result of iterated quotients: `I : J^∞` and the least `k` with `I : J^k = I : J^∞`.
#[derive(Debug, Clone)]
pub struct Saturation {
    pub ideal: Ideal,
    pub index: usize,
}

/// `I : J^∞` by iterating `I ↦ I : J` until it stops growing.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Saturation> {
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut cur = i.clone();
    let mut index = 0;
    loop {
        let next = quotient(&cur, j)?;
        if cur.contains_ideal(&next) {
            return Ok(Saturation { ideal: cur, index });
        }
        cur = next;
        index += 1;
    }
}

/// Projective saturation `I : R₊^∞`, as the intersection of the `I : x_i^∞`.
pub fn saturation(i: &Ideal) -> Result<Ideal> {
    if i.is_zero() {
        return Ok(i.clone());
    }
    if !i.is_homogeneous() {
        return saturate(i, &Ideal::irrelevant(i.ring())).map(|s| s.ideal);
    }
    let ring = i.ring();
    let parts = (0..ring.nvars()).map(|v| var_quotient(i, v, true)).collect::<Result<Vec<_>>>()?;
    intersect_chain(parts)
}

/// `I : h^∞`.
pub fn saturate_by_poly(i: &Ideal, h: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    if h.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if h.is_constant() || i.is_zero() {
        return Ok(i.clone());
    }
    if h.is_monomial() && i.is_homogeneous() {
        let m = h.leading_monomial().unwrap().clone();
        let mut acc = i.clone();
        for v in m.support() {
            acc = var_quotient(&acc, v, true)?;
        }
        return Ok(acc);
    }
    let n = ring.nvars();
    let (ext, pos) = with_fresh_var(ring, |m| TermOrder::elim(&[n], m))?;
    let t = Polynomial::var(&ext, n);
    let mut gens: Vec<Polynomial> = i.gens().iter().map(|g| g.scatter_into(&ext, &pos)).collect();
    gens.push(&Polynomial::one(&ext) - &(&t * &h.scatter_into(&ext, &pos)));
    let big = Ideal::new(&ext, gens)?;
    let kept = eliminate_in_place(&big, &[n]);
    Ideal::new(ring, kept.iter().map(|g| g.gather_into(ring, &pos).unwrap()).collect())
}

/// Rabinowitsch: `f ∈ √I` iff `1 ∈ I + (1 - t f)`.
pub fn radical_membership(f: &Polynomial, i: &Ideal) -> Result<bool> {
    let ring = i.ring();
    if !f.ring().compatible(ring) {
        return Err(Error::RingMismatch("radical membership across rings".into()));
    }
    if f.is_zero() || i.contains(f) {
        return Ok(true);
    }
    let (ext, pos) = with_fresh_var(ring, |_| TermOrder::DegRevLex)?;
    let t = Polynomial::var(&ext, ring.nvars());
    // start from the reduced basis, which membership has already computed
    let mut gens: Vec<Polynomial> = i.default_gb().gens().iter().map(|g| g.scatter_into(&ext, &pos)).collect();
    gens.push(&Polynomial::one(&ext) - &(&t * &f.scatter_into(&ext, &pos)));
    Ok(Ideal::new(&ext, gens)?.is_unit())
}

/// Extension of an ideal of the embedded subring.
pub fn extend(j: &Ideal, emb: &SubringEmbedding) -> Result<Ideal> {
    emb.extend(j)
}
