//! Ideals with cached Gröbner bases, subring embeddings, and the standard
//! ideal-theoretic operations in [`ops`].

pub mod ops;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_reduced, GroebnerBasis};
use crate::poly::{parse_polynomials, Monomial, Polynomial, Ring, TermOrder};

pub use ops::{
    eliminate, extend, intersect, intersect_all, quotient, quotient_by, radical_membership, saturate,
    saturate_by_poly, saturation, Saturation,
};

/// Finite generating set in a ring; reduced Gröbner bases are computed on demand
/// and cached per term order.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().unwrap().clone();
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(cache) }
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().compatible(ring) {
                return Err(Error::RingMismatch(format!("generator {g} is not in the ring")));
            }
            if !g.is_zero() {
                out.push(g.reorder(ring));
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: out, cache: Mutex::new(HashMap::new()) })
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        Ideal::new(ring, parse_polynomials(text, ring)?)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The irrelevant ideal generated by all variables.
    pub fn irrelevant(ring: &Ring) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()).unwrap()
    }

    pub fn from_monomials(ring: &Ring, monos: &[Monomial]) -> Ideal {
        let gens = monos.iter().map(|m| Polynomial::monomial(ring, ring.field().one(), m.clone())).collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        match self.gens.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(Error::NotHomogeneous(g.to_string())),
            None => Ok(()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// Reduced Gröbner basis under `order` (cached).
    pub fn gb(&self, order: &TermOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return gb.clone();
        }
        let gb = Arc::new(buchberger_reduced(&self.ring, &self.gens, order).expect("generators checked at construction"));
        self.cache.lock().unwrap().entry(order.clone()).or_insert(gb).clone()
    }

    /// Reduced Gröbner basis under the ring's own order.
    pub fn default_gb(&self) -> Arc<GroebnerBasis> {
        self.gb(&self.ring.order().clone())
    }

    /// Supply a basis computed elsewhere; it must be a reduced basis of this ideal.
    pub(crate) fn seed_gb(&self, gb: GroebnerBasis) {
        self.cache.lock().unwrap().insert(gb.order().clone(), Arc::new(gb));
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant()) || self.default_gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.default_gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals, by comparing reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> bool {
        if !self.ring.compatible(&other.ring) {
            return false;
        }
        let a = self.gb(&TermOrder::DegRevLex);
        let b = other.gb(&TermOrder::DegRevLex);
        a.gens() == b.gens()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch("sum of ideals in different rings".into()));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().map(|g| g.reorder(&self.ring)));
        Ideal::new(&self.ring, gens)
    }

    pub fn with_gens(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.try_mul(&g.reorder(&self.ring))?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// The reduced basis under the ring order, as a new ideal (canonical generators).
    pub fn reduced(&self) -> Ideal {
        let gb = self.default_gb();
        let out = Ideal::new(&self.ring, gb.gens().to_vec()).unwrap();
        out.seed_gb((*gb).clone());
        out
    }

    /// Canonical generator strings: the reduced basis in the ring order.
    pub fn canonical_strings(&self) -> Vec<String> {
        self.default_gb().gens().iter().map(|g| g.to_string()).collect()
    }

    /// Same generators in a ring with the same variables and another order.
    pub fn in_ring(&self, ring: &Ring) -> Result<Ideal> {
        Ideal::new(ring, self.gens.clone())
    }

    /// Leading monomials under `order`.
    pub fn initial_ideal(&self, order: &TermOrder) -> Ideal {
        let gb = self.gb(order);
        Ideal::from_monomials(&self.ring, &gb.leading_monomials())
    }

    /// Minimal monomial generators (requires a monomial ideal).
    pub fn minimal_monomials(&self) -> Result<Vec<Monomial>> {
        let mut ms: Vec<Monomial> = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if !g.is_monomial() {
                return Err(Error::NotMonomial(g.to_string()));
            }
            ms.push(g.leading_monomial().unwrap().clone());
        }
        Ok(minimalize(ms))
    }
}

/// Drop monomials divisible by others; result sorted by degree then exponents.
pub fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Generator sequence of a GB-based ideal matches; ideal equality helper.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if !a.ring().compatible(b.ring()) {
        return Err(Error::RingMismatch("comparing ideals of different rings".into()));
    }
    Ok(a.equals(b))
}

/// `f in I` via the normal form against the reduced basis of `I`.
pub fn ideal_membership(f: &Polynomial, i: &Ideal) -> bool {
    i.contains(f)
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A subring on a subset of the variables, with the positions it occupies.
#[derive(Debug, Clone)]
pub struct SubringEmbedding {
    big: Ring,
    sub: Ring,
    positions: Vec<usize>,
}

impl SubringEmbedding {
    pub fn new(big: &Ring, positions: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; big.nvars()];
        for &p in &positions {
            if p >= big.nvars() || seen[p] {
                return Err(Error::InvalidRing(format!("bad subring position {p}")));
            }
            seen[p] = true;
        }
        if positions.is_empty() {
            return Err(Error::EliminateAll);
        }
        Ok(SubringEmbedding { big: big.clone(), sub: big.subring(&positions), positions })
    }

    /// Subring on the variables not in `drop`.
    pub fn dropping(big: &Ring, drop: &[usize]) -> Result<Self> {
        SubringEmbedding::new(big, (0..big.nvars()).filter(|i| !drop.contains(i)).collect())
    }

    pub fn big(&self) -> &Ring {
        &self.big
    }

    pub fn sub(&self) -> &Ring {
        &self.sub
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn dropped(&self) -> Vec<usize> {
        (0..self.big.nvars()).filter(|i| !self.positions.contains(i)).collect()
    }

    pub fn lift(&self, f: &Polynomial) -> Polynomial {
        f.scatter_into(&self.big, &self.positions)
    }

    /// Restrict a polynomial free of the dropped variables.
    pub fn restrict(&self, f: &Polynomial) -> Option<Polynomial> {
        f.gather_into(&self.sub, &self.positions)
    }

    /// `I ∩ sub`.
    pub fn contract(&self, i: &Ideal) -> Result<Ideal> {
        eliminate(i, &self.dropped()).and_then(|c| c.in_ring(&self.sub))
    }

    /// The same generators read in the big ring.
    pub fn extend(&self, j: &Ideal) -> Result<Ideal> {
        if !j.ring().compatible(&self.sub) {
            return Err(Error::RingMismatch("ideal is not in the embedded subring".into()));
        }
        Ideal::new(&self.big, j.gens().iter().map(|g| self.lift(g)).collect())
    }
}
