//! Normal forms and Buchberger's algorithm with the Gebauer–Möller criteria.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring, Term, TermOrder};

/// Pair selection strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Smallest lcm (degree first, then the term order).
    #[default]
    Normal,
    /// Smallest sugar degree, ties broken as in `Normal`.
    Sugar,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_created: usize,
    pub pairs_pruned: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub max_basis_len: usize,
}

/// A reduced Gröbner basis: monic generators sorted by leading monomial, ascending.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    gens: Vec<Polynomial>,
    stats: GbStats,
}

fn support_mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | (1u64 << (i % 64)))
}

struct Divisors<'a> {
    entries: Vec<(&'a Polynomial, &'a Monomial, u64)>,
}

impl<'a> Divisors<'a> {
    fn new(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let entries = polys
            .into_iter()
            .map(|g| {
                let m = g.leading_monomial().expect("nonzero basis element");
                (g, m, support_mask(m))
            })
            .collect();
        Divisors { entries }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial> {
        let mask = support_mask(m);
        self.entries.iter().find(|(_, lm, lmask)| lmask & !mask == 0 && lm.divides(m)).map(|(g, _, _)| *g)
    }
}

fn reduce_with(f: &Polynomial, div: &Divisors<'_>, full: bool) -> Polynomial {
    let ring = f.ring().clone();
    let order = ring.order().clone();
    let mut rem: Vec<Term> = Vec::new();
    let mut terms: Vec<Term> = f.terms().to_vec();
    let mut i = 0;
    while i < terms.len() {
        let t = &terms[i];
        match div.find(&t.mono) {
            Some(g) => {
                let lt = g.leading_term().unwrap();
                let m = lt.mono.quotient_of(&t.mono).unwrap();
                let c = &t.coeff * &lt.coeff.inv();
                let neg = -&c;
                let scaled = g.terms()[1..].iter().map(|s| Term { coeff: &s.coeff * &neg, mono: s.mono.mul(&m) });
                terms = crate::poly::merge_terms(&terms[i + 1..], scaled, &order);
                i = 0;
            }
            None => {
                if !full {
                    rem.extend(terms.drain(i..));
                    break;
                }
                rem.push(terms[i].clone());
                i += 1;
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

/// Remainder of `f` on division by `gens` under `order`: the highest reducible
/// term is reduced first, by the first generator (in list order) whose leading
/// monomial divides it.
pub fn normal_form(f: &Polynomial, gens: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    let ring = f.ring().with_order(order.clone());
    let mut reordered = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.ring().compatible(&ring) {
            return Err(Error::RingMismatch("normal form against a foreign basis".into()));
        }
        if !g.is_zero() {
            reordered.push(g.reorder(&ring));
        }
    }
    let div = Divisors::new(&reordered);
    Ok(reduce_with(&f.reorder(&ring), &div, true))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let lf = f.leading_term().unwrap();
    let lg = g.leading_term().unwrap();
    let mf = lf.mono.quotient_of(lcm).unwrap();
    let mg = lg.mono.quotient_of(lcm).unwrap();
    let a = f.mul_term(&lf.coeff.inv(), &mf);
    a.sub_mul_term(&lg.coeff.inv(), &mg, g)
}

struct Builder {
    ring: Ring,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    strategy: Strategy,
    stats: GbStats,
}

impl Builder {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    /// Gebauer–Möller update for the new element `h` (already pushed).
    fn update(&mut self, h: usize) {
        let lh = self.lm(h).clone();
        let order = self.ring.order().clone();
        let mut cands: Vec<Pair> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lcm = lh.lcm(self.lm(g));
                let sugar = (self.sugar[h] + lcm.degree() - lh.degree())
                    .max(self.sugar[g] + lcm.degree() - self.lm(g).degree());
                Pair { i: g, j: h, lcm, sugar }
            })
            .collect();
        self.stats.pairs_created += cands.len();
        // chain criterion among the new pairs
        cands.sort_by(|a, b| a.lcm.degree().cmp(&b.lcm.degree()).then_with(|| order.compare(&a.lcm, &b.lcm)));
        let mut kept: Vec<Pair> = Vec::new();
        let mut coprime_lcms: Vec<Monomial> = Vec::new();
        for c in cands {
            if kept.iter().any(|k| k.lcm.divides(&c.lcm)) || coprime_lcms.iter().any(|m| m.divides(&c.lcm)) {
                self.stats.pairs_pruned += 1;
                continue;
            }
            if self.lm(c.i).is_coprime(&lh) {
                // product criterion; its lcm still shadows larger candidates
                self.stats.pairs_pruned += 1;
                coprime_lcms.push(c.lcm);
                continue;
            }
            kept.push(c);
        }
        // remove old pairs made redundant by h
        let before = self.pairs.len();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].leading_monomial().unwrap().lcm(&lh);
            let lj = polys[p.j].leading_monomial().unwrap().lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        self.stats.pairs_pruned += before - self.pairs.len();
        // retire basis elements whose leading monomial is a multiple of lh
        for g in 0..h {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.pairs.extend(kept);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let key_cmp = |a: &Pair, b: &Pair| -> Ordering {
            let first = match self.strategy {
                Strategy::Normal => Ordering::Equal,
                Strategy::Sugar => a.sugar.cmp(&b.sugar),
            };
            first
                .then_with(|| a.lcm.degree().cmp(&b.lcm.degree()))
                .then_with(|| order.compare(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
        };
        let mut best = 0;
        for k in 1..self.pairs.len() {
            if key_cmp(&self.pairs[k], &self.pairs[best]) == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn active(&self) -> impl Iterator<Item = &Polynomial> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p)
    }

    fn push(&mut self, h: Polynomial, sugar: u32) {
        self.polys.push(h.monic());
        self.sugar.push(sugar);
        self.active.push(true);
        let idx = self.polys.len() - 1;
        self.update(idx);
        let alive = self.active.iter().filter(|&&a| a).count();
        self.stats.max_basis_len = self.stats.max_basis_len.max(alive);
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger_reduced(ring: &Ring, gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    buchberger_with(ring, gens, order, Strategy::Normal)
}

pub fn buchberger_with(ring: &Ring, gens: &[Polynomial], order: &TermOrder, strategy: Strategy) -> Result<GroebnerBasis> {
    let work = ring.with_order(order.clone());
    if let TermOrder::Elim(mask) = order {
        if mask.len() != ring.nvars() {
            return Err(Error::DimensionMismatch { expected: ring.nvars(), got: mask.len() });
        }
    }
    let mut input: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.ring().compatible(ring) {
            return Err(Error::RingMismatch("generator from another ring".into()));
        }
        if !g.is_zero() {
            input.push(g.reorder(&work).monic());
        }
    }
    // deterministic input order: ascending leading monomial
    input.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        la.degree().cmp(&lb.degree()).then_with(|| order.compare(la, lb))
    });
    let mut b = Builder {
        ring: work.clone(),
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        strategy,
        stats: GbStats::default(),
    };
    for f in input {
        let r = reduce_with(&f, &Divisors::new(b.active()), true);
        if r.is_zero() {
            continue;
        }
        let s = r.total_degree().unwrap();
        b.push(r, s);
        if b.polys.last().unwrap().is_constant() {
            break;
        }
    }
    while let Some(pair) = b.select() {
        if b.polys.iter().zip(&b.active).any(|(p, &a)| a && p.is_constant()) {
            break;
        }
        b.stats.pairs_reduced += 1;
        let s = s_polynomial(&b.polys[pair.i], &b.polys[pair.j], &pair.lcm);
        let r = reduce_with(&s, &Divisors::new(b.active()), true);
        if r.is_zero() {
            b.stats.zero_reductions += 1;
            continue;
        }
        b.push(r, pair.sugar);
    }
    let stats = b.stats.clone();
    let gens = interreduce(b.active().cloned().collect(), order);
    Ok(GroebnerBasis { ring: work, gens, stats })
}

/// Minimalize and fully interreduce a Gröbner basis; output monic, ascending.
fn interreduce(mut g: Vec<Polynomial>, order: &TermOrder) -> Vec<Polynomial> {
    if let Some(c) = g.iter().find(|p| p.is_constant()) {
        return vec![c.monic()];
    }
    let cmp = |a: &Polynomial, b: &Polynomial| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
    g.sort_by(cmp);
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in g {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let div = Divisors::new(minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p));
        let lt = minimal[k].leading_term().unwrap().clone();
        let tail = Polynomial::from_sorted_terms(minimal[k].ring(), minimal[k].terms()[1..].to_vec());
        let red = reduce_with(&tail, &div, true);
        let mut terms = vec![lt];
        terms.extend(red.into_terms());
        out.push(Polynomial::from_sorted_terms(minimal[k].ring(), terms).monic());
    }
    out.sort_by(cmp);
    out
}

impl GroebnerBasis {
    /// Wrap generators already known to form a reduced basis under `ring`'s order.
    pub(crate) fn from_reduced(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        let order = ring.order().clone();
        let mut gens: Vec<Polynomial> = gens.iter().map(|g| g.reorder(ring)).collect();
        gens.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        GroebnerBasis { ring: ring.clone(), gens, stats: GbStats::default() }
    }

    /// Ring carrying the basis order.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        self.ring.order()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    /// Normal form of `f`, returned in the basis ring.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let div = Divisors::new(&self.gens);
        reduce_with(&f.reorder(&self.ring), &div, true)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Check reducedness and that every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        let lms = self.leading_monomials();
        for (k, g) in self.gens.iter().enumerate() {
            if !g.leading_coeff().is_some_and(|c| c.is_one()) {
                return false;
            }
            for t in g.terms() {
                if lms.iter().enumerate().any(|(i, m)| i != k && m.divides(&t.mono)) {
                    return false;
                }
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let lcm = lms[i].lcm(&lms[j]);
                if !self.reduce(&s_polynomial(&self.gens[i], &self.gens[j], &lcm)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| g.to_string())).finish()
    }
}
