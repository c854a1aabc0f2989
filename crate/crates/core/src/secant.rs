//! Secant cones and loci through a point, fibre lengths of linear projections,
//! and double projections from two points.

use crate::error::{Error, Result};
use crate::hilbert::{hilbert, intersection_length};
use crate::ideal::{saturation, Ideal};
use crate::linalg::rref;
use crate::pei::{pei_chain, pei_relative_chain, PeiChain};
use crate::poly::{linear_coeffs, ClosedPoint, FieldScalar, Polynomial, Ring};
use crate::radical::radical;

/// Cone of `k`-secant lines through `p` and the part of the scheme it meets.
#[derive(Debug, Clone)]
pub struct SecantResult {
    pub k: usize,
    pub k0: usize,
    /// Ideal of the cone, `sqrt(K_{k-1})` read in the ambient ring.
    pub cone: Ideal,
    /// `I + cone`.
    pub locus: Ideal,
    pub saturated_locus: Option<Ideal>,
    /// `K_{k-1} = S`: no line through `p` meets the scheme in length `k` or more.
    pub cone_empty: bool,
    pub locus_empty: bool,
    /// Projective dimension of the cone, `None` when empty.
    pub cone_dim: Option<usize>,
}

fn off_scheme_chain(i: &Ideal, p: &ClosedPoint) -> Result<PeiChain> {
    let chain = pei_chain(i, p)?;
    if chain.point_on_scheme() {
        return Err(Error::PointOnScheme);
    }
    Ok(chain)
}

/// The `k`-secant cone of `I` through `p`.
pub fn secant_cone(i: &Ideal, p: &ClosedPoint, k: usize) -> Result<SecantResult> {
    secant_locus(i, p, k, false)
}

/// The `k`-secant cone and locus; with `saturate`, the locus is saturated by the
/// irrelevant ideal.
pub fn secant_locus(i: &Ideal, p: &ClosedPoint, k: usize, saturate: bool) -> Result<SecantResult> {
    if k == 0 {
        return Err(Error::Precondition("secant order must be at least 1".into()));
    }
    let chain = off_scheme_chain(i, p)?;
    let ring = i.ring().clone();
    let kk = chain.transformed(k - 1);
    let cone_empty = kk.is_unit();
    let cone = if cone_empty {
        Ideal::unit(&ring)
    } else {
        // the radical commutes with adjoining the variable of the point
        let r = radical(kk)?;
        chain.pull_back_ideal(&r)?.reduced()
    };
    let locus = i.sum(&cone)?.reduced();
    let saturated_locus = if saturate { Some(saturation(&locus)?.reduced()) } else { None };
    let locus_empty = match &saturated_locus {
        Some(s) => s.is_unit(),
        None => hilbert(&locus)?.proj_dim().is_none(),
    };
    let cone_dim = hilbert(&cone)?.proj_dim();
    Ok(SecantResult { k, k0: chain.k0(), cone, locus, saturated_locus, cone_empty, locus_empty, cone_dim })
}

/// An ideal rewritten modulo linear forms: pivot variables substituted away.
#[derive(Debug, Clone)]
pub struct LinearPresentation {
    pub ring: Ring,
    /// Ambient indices of the remaining variables.
    pub free: Vec<usize>,
    pub ideal: Ideal,
}

/// Present `i` in `K[free vars]`, where `linear` is generated by linear forms and
/// the pivots of its reduced echelon form in the natural variable order are eliminated.
pub fn present_modulo_linear(i: &Ideal, linear: &Ideal) -> Result<LinearPresentation> {
    let ring = i.ring().clone();
    let n = ring.nvars();
    let mut rows = Vec::new();
    for g in linear.gens() {
        if !g.is_linear_form() {
            return Err(Error::Precondition(format!("{g} is not a linear form")));
        }
        rows.push(linear_coeffs(g)?);
    }
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Err(Error::EliminateAll);
    }
    let sub = ring.subring(&free);
    let mut images = Vec::with_capacity(n);
    for v in 0..n {
        if let Some(r) = pivots.iter().position(|&c| c == v) {
            let terms: Vec<(FieldScalar, crate::poly::Monomial)> = free
                .iter()
                .enumerate()
                .filter(|(_, &f)| !rows[r][f].is_zero())
                .map(|(j, &f)| (-&rows[r][f], Polynomial::var(&sub, j).leading_monomial().unwrap().clone()))
                .collect();
            images.push(Polynomial::from_terms(&sub, terms));
        } else {
            let j = free.iter().position(|&f| f == v).unwrap();
            images.push(Polynomial::var(&sub, j));
        }
    }
    let gens = i.gens().iter().map(|g| g.substitute(&images, &sub)).collect();
    Ok(LinearPresentation { ring: sub.clone(), free, ideal: Ideal::new(&sub, gens)?.reduced() })
}

/// Convert coordinates on the target of the projection from `p` (the transformed
/// variables `x1..xn`) into an ambient representative point.
pub fn target_point(chain: &PeiChain, coords: Vec<FieldScalar>) -> Result<ClosedPoint> {
    let ring = chain.point().ring().clone();
    if coords.len() + 1 != ring.nvars() {
        return Err(Error::DimensionMismatch { expected: ring.nvars() - 1, got: coords.len() });
    }
    let mut full = vec![ring.field().zero()];
    full.extend(coords);
    let image = ClosedPoint::new(&ring, full)?;
    chain.transform().inverse().map_point(&image)
}

/// `1 + max{k : K_k ⊆ q}` from the chain, or 0 when `K_0 ⊄ q`.
pub fn chain_length_at(ideals: &[Ideal], q: &ClosedPoint) -> Result<u64> {
    let mut len = 0;
    for k in ideals {
        if crate::pei::vanish_at(k, q)? {
            len += 1;
        } else {
            break;
        }
    }
    Ok(len)
}

/// Length of the fibre over the image of `q` of the projection from `p`,
/// cross-checked against the length of the scheme on the line `<p, q>`.
pub fn fibre_length(i: &Ideal, p: &ClosedPoint, q: &ClosedPoint) -> Result<u64> {
    if p == q {
        return Err(Error::InvalidPoint("the fibre point coincides with the centre".into()));
    }
    let chain = off_scheme_chain(i, p)?;
    let from_chain = chain_length_at(chain.ideals(), q)?;
    let line = Ideal::new(i.ring(), ClosedPoint::common_forms(&[p, q])?)?;
    let from_line = intersection_length(i, &line)?;
    if from_chain != from_line {
        return Err(Error::Inconsistent(format!("chain gives {from_chain}, line gives {from_line}")));
    }
    Ok(from_chain)
}

/// Outcome of testing whether `K_0(I at p) + K_0(I at p')` cuts out the scheme.
#[derive(Debug, Clone)]
pub struct CleverCheck {
    pub is_clever: bool,
    /// A generator of `saturation(I)` outside the saturated sum, when not clever.
    pub witness: Option<Polynomial>,
    pub sum: Ideal,
    pub saturated_sum: Ideal,
}

/// Does `(K_0(p) + K_0(p'))^sat = I^sat` hold, for two distinct points off the
/// scheme whose line misses it?
pub fn clever_decomposition_check(i: &Ideal, p: &ClosedPoint, p2: &ClosedPoint) -> Result<CleverCheck> {
    if p == p2 {
        return Err(Error::InvalidPoint("the two points coincide".into()));
    }
    let c1 = off_scheme_chain(i, p)?;
    let c2 = off_scheme_chain(i, p2)?;
    let line = Ideal::new(i.ring(), ClosedPoint::common_forms(&[p, p2])?)?;
    if hilbert(&i.sum(&line)?)?.proj_dim().is_some() {
        return Err(Error::Precondition("the line through the two points meets the scheme".into()));
    }
    let sum = c1.k(0).sum(c2.k(0))?;
    let saturated_sum = saturation(&sum)?.reduced();
    let target = saturation(i)?;
    let is_clever = saturated_sum.equals(&target);
    let witness = if is_clever {
        None
    } else {
        i.gens()
            .iter()
            .chain(target.default_gb().gens().iter())
            .find(|g| !saturated_sum.contains(g))
            .cloned()
    };
    Ok(CleverCheck { is_clever, witness, sum, saturated_sum })
}

/// Fibre length over the image of `q` of the projection from the line `<drop, second>`
/// when the projection from `drop` is an isomorphism on the scheme: read off the
/// relative chain, cross-checked against the plane `<drop, second, q>`.
pub fn relative_fibre_length(i: &Ideal, drop: &ClosedPoint, second: &ClosedPoint, q: &ClosedPoint) -> Result<u64> {
    let rel = pei_relative_chain(i, drop, second)?;
    if !rel.first_isomorphic {
        return Err(Error::Precondition("the projection from the first point is not an isomorphism".into()));
    }
    let from_chain = chain_length_at(rel.ideals(), q)?;
    let from_plane = intersection_length(i, &plane_ideal(i, drop, second, q)?)?;
    if from_chain != from_plane {
        return Err(Error::Inconsistent(format!("chain gives {from_chain}, plane gives {from_plane}")));
    }
    Ok(from_chain)
}

fn plane_ideal(i: &Ideal, p: &ClosedPoint, p2: &ClosedPoint, q: &ClosedPoint) -> Result<Ideal> {
    let forms = ClosedPoint::common_forms(&[p, p2, q])?;
    if forms.len() + 3 != i.ring().nvars() {
        return Err(Error::InvalidPoint("the three points are not in general position".into()));
    }
    Ideal::new(i.ring(), forms)
}

/// Fibre length over the image of `q` of the double projection from `p` and `p'`,
/// as the product of the two relative chain lengths; cross-checked against the
/// length of the scheme on the plane `<p, p', q>`.
pub fn double_projection_fibre_length(i: &Ideal, p: &ClosedPoint, p2: &ClosedPoint, q: &ClosedPoint) -> Result<u64> {
    let check = clever_decomposition_check(i, p, p2)?;
    if !check.is_clever {
        return Err(Error::Precondition("the two projections do not decompose the scheme".into()));
    }
    let a = pei_relative_chain(i, p, p2)?;
    let b = pei_relative_chain(i, p2, p)?;
    let la = chain_length_at(a.ideals(), q)?;
    let lb = chain_length_at(b.ideals(), q)?;
    let product = la * lb;
    let from_plane = intersection_length(i, &plane_ideal(i, p, p2, q)?)?;
    if product != from_plane {
        return Err(Error::Inconsistent(format!("chains give {la} x {lb}, plane gives {from_plane}")));
    }
    Ok(product)
}
