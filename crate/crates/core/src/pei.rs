//! Partial elimination ideals with respect to a closed point, relative chains
//! for double projections, and a degree-wise linear-algebra oracle.

use crate::error::{Error, Result};
use crate::ideal::{Ideal, SubringEmbedding};
use crate::linalg::{SparseEchelon, SparseRow};
use crate::poly::{count_monomials, monomials_of_degree, ClosedPoint, LinearMap, Monomial, Polynomial, Ring, TermOrder};

/// Largest number of monomials the oracle will index in one degree.
pub const ORACLE_LIMIT: usize = 20_000;

/// `K_0 ⊆ K_1 ⊆ ... ⊆ K_{k0}` for an ideal `I` and a point `p`.
#[derive(Debug, Clone)]
pub struct PeiChain {
    point: ClosedPoint,
    transform: LinearMap,
    embedding: SubringEmbedding,
    k0: usize,
    transformed: Vec<Ideal>,
    ideals: Vec<Ideal>,
    point_on_scheme: bool,
}

impl PeiChain {
    pub fn point(&self) -> &ClosedPoint {
        &self.point
    }

    /// The transform `ψ` sending the ideal of the point onto `(x1, ..., xn)`.
    pub fn transform(&self) -> &LinearMap {
        &self.transform
    }

    /// The subring `K[x1, ..., xn]` of the transformed coordinates.
    pub fn embedding(&self) -> &SubringEmbedding {
        &self.embedding
    }

    pub fn k0(&self) -> usize {
        self.k0
    }

    pub fn point_on_scheme(&self) -> bool {
        self.point_on_scheme
    }

    /// `K_k` pulled back to the coordinates of the ambient ring; `K_k = K_{k0}` for `k > k0`.
    pub fn k(&self, k: usize) -> &Ideal {
        &self.ideals[k.min(self.k0)]
    }

    /// `K_k` in the transformed subring.
    pub fn transformed(&self, k: usize) -> &Ideal {
        &self.transformed[k.min(self.k0)]
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    /// First `k` with `K_k = S`, if any.
    pub fn first_unit(&self) -> Option<usize> {
        self.transformed.iter().position(|k| k.is_unit())
    }

    /// Map a polynomial of the transformed subring back to the ambient coordinates.
    pub fn pull_back(&self, f: &Polynomial) -> Polynomial {
        let lifted = self.embedding.lift(f);
        self.transform.inverse().apply(&lifted).expect("same ring")
    }

    pub fn pull_back_ideal(&self, j: &Ideal) -> Result<Ideal> {
        Ideal::new(self.embedding.big(), j.gens().iter().map(|g| self.pull_back(g)).collect())
    }

    /// Does every generator of `K_k` vanish at the ambient point `q`?
    pub fn contained_in(&self, k: usize, q: &ClosedPoint) -> Result<bool> {
        vanish_at(self.k(k), q)
    }

    /// Largest `k` with `K_k ⊆ K_0 + q` for a graded ideal `q` of the transformed
    /// subring; `None` when the whole chain stays inside `K_0 + q`.
    pub fn k0_at(&self, q: &Ideal) -> Result<Option<usize>> {
        let base = self.transformed(0).sum(q)?;
        let mut last = None;
        for (k, kk) in self.transformed.iter().enumerate() {
            if !base.contains_ideal(kk) {
                return Ok(last);
            }
            last = Some(k);
        }
        Ok(None)
    }

    /// `K_{k-1} ⊆ K_k` for all k, by membership.
    pub fn is_ascending(&self) -> bool {
        self.transformed.windows(2).all(|w| w[1].contains_ideal(&w[0]))
    }
}

pub(crate) fn vanish_at(i: &Ideal, q: &ClosedPoint) -> Result<bool> {
    for g in i.gens() {
        if !q.vanishes(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// PEI chain of `I` at `p`, using the transform attached to `p`.
pub fn pei_chain(i: &Ideal, p: &ClosedPoint) -> Result<PeiChain> {
    if !p.ring().compatible(i.ring()) {
        return Err(Error::RingMismatch("point and ideal live in different rings".into()));
    }
    pei_chain_with(i, p, LinearMap::for_point(p))
}

/// PEI chain with a caller-chosen transform; `ψ` must carry the ideal of `p`
/// onto `(x1, ..., xn)`.
pub fn pei_chain_with(i: &Ideal, p: &ClosedPoint, psi: LinearMap) -> Result<PeiChain> {
    i.check_homogeneous()?;
    let ring = i.ring().clone();
    let image = psi.map_point(p)?;
    if image.pivot() != 0 || image.coords()[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::InvalidPoint("transform does not move the point to (1:0:...:0)".into()));
    }
    let point_on_scheme = vanish_at(i, p)?;
    let moved = Ideal::new(&ring, psi.apply_all(i.gens())?)?;
    let gb = moved.gb(&TermOrder::elim(&[0], ring.nvars()));
    let embedding = SubringEmbedding::dropping(&ring, &[0])?;
    let data: Vec<(u32, Polynomial)> = gb
        .gens()
        .iter()
        .map(|g| {
            let (d, lc) = g.leading_data_in_var(0).expect("nonzero");
            (d, embedding.restrict(&lc).expect("x0-free"))
        })
        .collect();
    let k0 = data.iter().map(|(d, _)| *d as usize).max().unwrap_or(0);
    let mut transformed = Vec::with_capacity(k0 + 1);
    for k in 0..=k0 {
        let gens: Vec<Polynomial> = data.iter().filter(|(d, _)| *d as usize <= k).map(|(_, c)| c.clone()).collect();
        transformed.push(Ideal::new(embedding.sub(), gens)?.reduced());
    }
    let mut chain =
        PeiChain { point: p.clone(), transform: psi, embedding, k0, transformed, ideals: Vec::new(), point_on_scheme };
    chain.ideals = chain.transformed.iter().map(|k| chain.pull_back_ideal(k)).collect::<Result<_>>()?;
    Ok(chain)
}

/// Is the projection from `p` an isomorphism on the scheme, i.e. `K_1 ⊇ S_+`?
pub fn is_isomorphic_projection(i: &Ideal, p: &ClosedPoint) -> Result<bool> {
    let chain = pei_chain(i, p)?;
    if chain.point_on_scheme {
        return Err(Error::PointOnScheme);
    }
    let k1 = chain.transformed(1);
    let sub = chain.embedding.sub();
    Ok((0..sub.nvars()).all(|v| k1.contains(&Polynomial::var(sub, v))))
}

/// PEIs of `I ∩ K[p_1]` with respect to the image of a second point.
#[derive(Debug, Clone)]
pub struct RelativeChain {
    pub first: PeiChain,
    /// Chain inside the transformed subring of `first`.
    pub inner: PeiChain,
    /// Whether the first projection is an isomorphism on the scheme.
    pub first_isomorphic: bool,
    ideals: Vec<Ideal>,
}

impl RelativeChain {
    pub fn k0(&self) -> usize {
        self.inner.k0()
    }

    /// `K_k` in ambient coordinates.
    pub fn k(&self, k: usize) -> &Ideal {
        &self.ideals[k.min(self.inner.k0())]
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn contained_in(&self, k: usize, q: &ClosedPoint) -> Result<bool> {
        vanish_at(self.k(k), q)
    }
}

/// Chain of `K_0^{drop}(I)` at the image of `second` under the projection from `drop`.
pub fn pei_relative_chain(i: &Ideal, drop: &ClosedPoint, second: &ClosedPoint) -> Result<RelativeChain> {
    if drop == second {
        return Err(Error::InvalidPoint("the two points coincide".into()));
    }
    let first = pei_chain(i, drop)?;
    let first_isomorphic = !first.point_on_scheme && {
        let k1 = first.transformed(1);
        let sub = first.embedding.sub();
        (0..sub.nvars()).all(|v| k1.contains(&Polynomial::var(sub, v)))
    };
    let contracted = first.transformed(0).clone();
    let image = first.transform.map_point(second)?;
    let sub = first.embedding.sub().clone();
    let q = ClosedPoint::new(&sub, image.coords()[1..].to_vec())?;
    let inner = pei_chain(&contracted, &q)?;
    let ideals = inner
        .ideals()
        .iter()
        .map(|k| first.pull_back_ideal(k))
        .collect::<Result<Vec<_>>>()?;
    Ok(RelativeChain { first, inner, first_isomorphic, ideals })
}

/// Basis of `(K_k)_d` in the transformed subring, by linear algebra on
/// `ψ(I)_{d+k}`: the rows of an echelon form whose pivot lies among the
/// monomials `x0^k m` project onto a basis of `(K_k)_d`.
pub fn pei_oracle_degree(i: &Ideal, p: &ClosedPoint, k: usize, d: usize) -> Result<Vec<Polynomial>> {
    i.check_homogeneous()?;
    let ring = i.ring().clone();
    let n = ring.nvars();
    let top = (d + k) as u32;
    let count = count_monomials(n, top);
    if count > ORACLE_LIMIT as u128 {
        return Err(Error::Infeasible(count.min(usize::MAX as u128) as usize));
    }
    let psi = LinearMap::for_point(p);
    let gens = psi.apply_all(i.gens())?;
    let mut monos = monomials_of_degree(n, top);
    let block = |m: &Monomial| -> u8 {
        match m.exp(0).cmp(&(k as u32)) {
            std::cmp::Ordering::Greater => 0,
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Less => 2,
        }
    };
    monos.sort_by(|a, b| block(a).cmp(&block(b)).then_with(|| b.cmp(a)));
    let index: std::collections::HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(c, m)| (m, c)).collect();
    let mut rows_budget = 0usize;
    let mut ech = SparseEchelon::new();
    for g in &gens {
        let e = g.total_degree().unwrap();
        if e > top {
            continue;
        }
        let mults = monomials_of_degree(n, top - e);
        rows_budget += mults.len();
        if rows_budget > 4 * ORACLE_LIMIT {
            return Err(Error::Infeasible(rows_budget));
        }
        for m in mults {
            let mut row: SparseRow = g.terms().iter().map(|t| (index[&t.mono.mul(&m)], t.coeff.clone())).collect();
            row.sort_by_key(|(c, _)| *c);
            ech.insert(row);
        }
    }
    let sub = ring.subring(&(1..n).collect::<Vec<_>>());
    let positions: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    for row in ech.rows() {
        let lead = row[0].0;
        if block(&monos[lead]) != 1 {
            continue;
        }
        let terms = row
            .iter()
            .filter(|(c, _)| block(&monos[*c]) == 1)
            .map(|(c, v)| (v.clone(), monos[*c].select(&positions)));
        out.push(Polynomial::from_terms(&sub, terms));
    }
    Ok(out)
}

/// Dimension of `(J)_d` for an ideal of a polynomial ring, from its initial ideal.
pub fn graded_piece_dim(j: &Ideal, d: u32) -> Result<usize> {
    let n = j.ring().nvars();
    let count = count_monomials(n, d);
    if count > ORACLE_LIMIT as u128 {
        return Err(Error::Infeasible(count as usize));
    }
    let lms = j.gb(&TermOrder::DegRevLex).leading_monomials();
    Ok(monomials_of_degree(n, d).iter().filter(|m| lms.iter().any(|l| l.divides(m))).count())
}

/// Ring of the transformed subring for an ambient ring: variables `1..n`.
pub fn target_ring(ring: &Ring) -> Ring {
    ring.subring(&(1..ring.nvars()).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn single_generator_chain() {
        let r = PolyRing::standard(1, Field::Rational);
        let i = Ideal::parse(&r, "x0^2").unwrap();
        let p = ClosedPoint::from_ints(&r, &[1, 0]).unwrap();
        let c = pei_chain(&i, &p).unwrap();
        assert_eq!(c.k0(), 2);
        assert!(c.transformed(0).is_zero());
        assert!(c.transformed(1).is_zero());
        assert!(c.transformed(2).is_unit());
        assert_eq!(c.first_unit(), Some(2));
    }

    #[test]
    fn oracle_matches_chain_on_twisted_cubic() {
        let r = PolyRing::standard(3, Field::Rational);
        let i = Ideal::parse(&r, "x0*x2-x1^2, x1*x3-x2^2, x0*x3-x1*x2").unwrap();
        let p = ClosedPoint::from_ints(&r, &[1, 0, 0, 1]).unwrap();
        let c = pei_chain(&i, &p).unwrap();
        assert!(c.is_ascending());
        for k in 0..=c.k0() + 1 {
            for d in 0..4 {
                let basis = pei_oracle_degree(&i, &p, k, d).unwrap();
                let kk = c.transformed(k);
                assert_eq!(basis.len(), graded_piece_dim(kk, d as u32).unwrap(), "k={k} d={d}");
                assert!(basis.iter().all(|b| kk.contains(b)));
            }
        }
    }
}
