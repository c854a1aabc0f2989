//! Seeded random property checks shared by the acceptance run and the property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pei_core::groebner::{buchberger_with, Strategy};
use pei_core::hilbert::{hilbert, hilbert_data};
use pei_core::ideal::{radical_membership, Ideal};
use pei_core::pei::{graded_piece_dim, pei_chain, pei_chain_with, pei_oracle_degree};
use pei_core::poly::{monomials_of_degree, ClosedPoint, LinearMap, Polynomial, Ring, TermOrder};
use pei_core::radical::radical;
use pei_core::scroll::scroll_ideal;
use pei_core::secant::fibre_length;

use super::{ideal, qq, unit_point};

pub type Outcome = Result<(), String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(rng: &mut ChaCha8Rng, r: &Ring) -> pei_core::FieldScalar {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    r.field().from_i64(c)
}

/// Homogeneous form of degree `d` with up to `terms` terms.
pub fn random_form(rng: &mut ChaCha8Rng, r: &Ring, d: u32, terms: usize) -> Polynomial {
    let monos = monomials_of_degree(r.nvars(), d);
    let picked: Vec<_> = monos.choose_multiple(rng, terms.min(monos.len())).cloned().collect();
    let f = Polynomial::from_terms(r, picked.into_iter().map(|m| (coeff(rng, r), m)).collect::<Vec<_>>());
    if f.is_zero() {
        Polynomial::var(r, 0).pow(d)
    } else {
        f
    }
}

fn random_linear(rng: &mut ChaCha8Rng, r: &Ring) -> Polynomial {
    random_form(rng, r, 1, r.nvars())
}

fn random_point(rng: &mut ChaCha8Rng, r: &Ring) -> ClosedPoint {
    loop {
        let coords: Vec<i64> = (0..r.nvars()).map(|_| rng.gen_range(-2..=2)).collect();
        if let Ok(p) = ClosedPoint::from_ints(r, &coords) {
            return p;
        }
    }
}

fn random_map(rng: &mut ChaCha8Rng, r: &Ring) -> LinearMap {
    loop {
        let rows = (0..r.nvars())
            .map(|_| (0..r.nvars()).map(|_| r.field().from_i64(rng.gen_range(-2..=2))).collect())
            .collect();
        if let Ok(m) = LinearMap::new(r, rows) {
            return m;
        }
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, r: &Ring, ngens: usize, max_deg: u32) -> Ideal {
    let gens = (0..ngens)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_form(rng, r, d, 3)
        })
        .collect();
    Ideal::new(r, gens).unwrap()
}

/// Ideal off a random point: the generators avoid vanishing at it.
fn ideal_and_point(rng: &mut ChaCha8Rng, r: &Ring) -> (Ideal, ClosedPoint) {
    loop {
        let ngens = rng.gen_range(2..=3);
        let i = random_ideal(rng, r, ngens, 3);
        let p = random_point(rng, r);
        if i.gens().iter().any(|g| !p.vanishes(g).unwrap()) {
            return (i, p);
        }
    }
}

fn fail(what: &str, seed: u64, detail: impl std::fmt::Display) -> String {
    format!("{what} (seed {seed}): {detail}")
}

fn enough(done: u64, count: u64) -> Outcome {
    if done < count {
        return Err(format!("only {done} usable instances"));
    }
    Ok(())
}

pub fn gb_uniqueness(count: u64) -> Outcome {
    for seed in 0..count {
        let mut g = rng(1000 + seed);
        let r = qq(3);
        let i = random_ideal(&mut g, &r, 3, 3);
        for order in [TermOrder::DegRevLex, TermOrder::Lex, TermOrder::elim(&[0], 4)] {
            let a = i.gb(&order);
            if !a.verify() {
                return Err(fail("certificate", seed, &i));
            }
            let again = buchberger_with(&r, a.gens(), &order, Strategy::Normal).unwrap();
            if again.gens() != a.gens() {
                return Err(fail("GB of a GB", seed, &i));
            }
            let sugar = buchberger_with(&r, i.gens(), &order, Strategy::Sugar).unwrap();
            if sugar.gens() != a.gens() {
                return Err(fail("sugar strategy", seed, &i));
            }
            // the same ideal from shuffled, recombined generators
            let mut gens = i.gens().to_vec();
            gens.shuffle(&mut g);
            let mixed: Vec<Polynomial> = (0..gens.len())
                .map(|k| {
                    let f = &gens[k];
                    let h = &gens[(k + 1) % gens.len()];
                    if k + 1 < gens.len() && f.total_degree() == h.total_degree() {
                        f.try_add(&h.scale(&r.field().from_i64(2))).unwrap()
                    } else {
                        f.clone()
                    }
                })
                .collect();
            let other = buchberger_with(&r, &mixed, &order, Strategy::Normal).unwrap();
            if other.gens() != a.gens() {
                return Err(fail("generator independence", seed, &i));
            }
        }
    }
    Ok(())
}

pub fn pei_ascending(count: u64) -> Outcome {
    for seed in 0..count {
        let mut g = rng(2000 + seed);
        let r = qq(3);
        let (i, p) = ideal_and_point(&mut g, &r);
        let chain = pei_chain(&i, &p).map_err(|e| fail("chain", seed, e))?;
        if !chain.is_ascending() {
            return Err(fail("ascending", seed, &i));
        }
        let top = chain.transformed(chain.k0());
        if chain.point_on_scheme() == top.is_unit() {
            return Err(fail("top of chain", seed, &i));
        }
    }
    Ok(())
}

pub fn pei_oracle(count: u64) -> Outcome {
    for seed in 0..count {
        let mut g = rng(3000 + seed);
        let r = qq(2);
        let (i, p) = ideal_and_point(&mut g, &r);
        let chain = pei_chain(&i, &p).map_err(|e| fail("chain", seed, e))?;
        for k in 0..=chain.k0() + 1 {
            let kk = chain.transformed(k);
            for d in 0..=4 {
                let basis = pei_oracle_degree(&i, &p, k, d).map_err(|e| fail("oracle", seed, e))?;
                let dim = graded_piece_dim(kk, d as u32).unwrap();
                if basis.len() != dim || !basis.iter().all(|b| kk.contains(b)) {
                    return Err(fail("oracle", seed, format!("{i} k={k} d={d}: {} vs {dim}", basis.len())));
                }
            }
        }
    }
    Ok(())
}

pub fn transform_equivariance(count: u64) -> Outcome {
    for seed in 0..count {
        let mut g = rng(4000 + seed);
        let r = qq(3);
        let (i, p) = ideal_and_point(&mut g, &r);
        let psi = random_map(&mut g, &r);
        let a = pei_chain(&i, &p).unwrap();
        let moved = Ideal::new(&r, psi.apply_all(i.gens()).unwrap()).unwrap();
        let b = pei_chain(&moved, &psi.map_point(&p).unwrap()).unwrap();
        if a.k0() != b.k0() {
            return Err(fail("k0", seed, &i));
        }
        for k in 0..=a.k0() {
            let image = Ideal::new(&r, psi.apply_all(a.k(k).gens()).unwrap()).unwrap();
            if !image.equals(b.k(k)) {
                return Err(fail("equivariance", seed, format!("{i} at k={k}")));
            }
        }
    }
    Ok(())
}

pub fn y_independence(count: u64) -> Outcome {
    for seed in 0..count {
        let mut g = rng(5000 + seed);
        let r = qq(3);
        let (i, p) = ideal_and_point(&mut g, &r);
        let base: Vec<Polynomial> = p.forms().into_values().collect();
        let y = loop {
            let y = random_linear(&mut g, &r);
            if !y.evaluate(p.coords()).unwrap().is_zero() {
                break y;
            }
        };
        let mix = random_map(&mut g, &qq(base.len() - 1));
        let forms: Vec<Polynomial> = mix
            .images()
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&base)
                    .fold(Polynomial::zero(&r), |acc, (c, f)| acc.try_add(&f.scale(c)).unwrap())
            })
            .collect();
        let psi = LinearMap::for_point_with(&p, &y, &forms).map_err(|e| fail("transform", seed, e))?;
        let a = pei_chain(&i, &p).unwrap();
        let b = pei_chain_with(&i, &p, psi).unwrap();
        if a.k0() != b.k0() {
            return Err(fail("k0", seed, &i));
        }
        for k in 0..=a.k0() {
            if !a.k(k).equals(b.k(k)) {
                return Err(fail("independence of y", seed, format!("{i} at k={k}")));
            }
        }
    }
    Ok(())
}

/// Fibre lengths from the chain agree with line intersection lengths; the
/// comparison runs inside `fibre_length`.
pub fn fibre_criterion(count: u64) -> Outcome {
    let r3 = qq(3);
    let iz = ideal(&r3, "x0^4, x0^3*x1, x0^2*x1^2+x0*x3^3, x0*x1*x2^2+x1^4, x1*x3^3");
    let p = unit_point(&r3, &[0]);
    for coords in [[0, 0, 1, 0], [0, 0, 1, 1], [0, 1, 0, 0], [1, 1, 1, 1], [0, 0, 0, 1]] {
        let q = ClosedPoint::from_ints(&r3, &coords).unwrap();
        fibre_length(&iz, &p, &q).map_err(|e| format!("I_Z at {q}: {e}"))?;
    }
    let r10 = qq(10);
    let x = scroll_ideal(&r10, &[1, 1, 2, 3]).unwrap();
    let sources: [&[usize]; 6] = [&[7, 10], &[9], &[0, 10], &[5], &[0, 3], &[4, 9]];
    let targets: [&[usize]; 5] = [&[7], &[10], &[0], &[4], &[1]];
    for s in sources {
        let p = unit_point(&r10, s);
        for t in targets {
            let q = unit_point(&r10, t);
            if q != p {
                fibre_length(&x, &p, &q).map_err(|e| format!("S(1,1,2,3) from {p} at {q}: {e}"))?;
            }
        }
    }
    let w = scroll_ideal(&r10, &[1, 8]).unwrap();
    for (s, t) in [(3, 2), (4, 2), (9, 10), (3, 0)] {
        let (p, q) = (unit_point(&r10, &[s]), unit_point(&r10, &[t]));
        fibre_length(&w, &p, &q).map_err(|e| format!("S(1,8) from {p} at {q}: {e}"))?;
    }
    for seed in 0..count {
        // random points on a twisted cubic, random centres
        let mut g = rng(6000 + seed);
        let r = qq(3);
        let cubic = ideal(&r, "x0*x2-x1^2, x1*x3-x2^2, x0*x3-x1*x2");
        let p = loop {
            let p = random_point(&mut g, &r);
            if cubic.gens().iter().any(|f| !p.vanishes(f).unwrap()) {
                break p;
            }
        };
        let (s, t) = (g.gen_range(-2i64..=2), g.gen_range(-2i64..=2));
        let q = ClosedPoint::from_ints(&r, &[s * s * s, s * s * t, s * t * t, t * t * t])
            .or_else(|_| ClosedPoint::from_ints(&r, &[1, 0, 0, 0]))
            .unwrap();
        fibre_length(&cubic, &p, &q).map_err(|e| fail("twisted cubic", seed, e))?;
    }
    Ok(())
}

pub fn radical_certification(count: u64) -> Outcome {
    let mut done = 0;
    for seed in 0..10 * count {
        if done == count {
            break;
        }
        let mut g = rng(7000 + seed);
        let r = qq(2);
        let ngens = g.gen_range(2..=3);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                // a square times a linear form at most, keeping degrees at 3
                let a = random_linear(&mut g, &r).pow(g.gen_range(1..=2));
                if g.gen_bool(0.5) {
                    a.try_mul(&random_linear(&mut g, &r)).unwrap()
                } else {
                    a
                }
            })
            .collect();
        let i = Ideal::new(&r, gens).unwrap();
        if i.is_unit() {
            continue;
        }
        done += 1;
        let rad = radical(&i).map_err(|e| fail("radical", seed, format!("{i}: {e}")))?;
        if !rad.contains_ideal(&i) {
            return Err(fail("containment", seed, &i));
        }
        for f in rad.gens() {
            if !radical_membership(f, &i).unwrap() {
                return Err(fail("Rabinowitsch", seed, format!("{f} for {i}")));
            }
        }
        if !radical(&rad).unwrap().equals(&rad) {
            return Err(fail("idempotence", seed, &i));
        }
    }
    enough(done, count)
}

pub fn complete_intersection(count: u64) -> Outcome {
    let mut done = 0;
    for seed in 0..10 * count {
        if done == count {
            break;
        }
        let mut g = rng(8000 + seed);
        let r = qq(3);
        let ngens = g.gen_range(1..=3);
        let degrees: Vec<u32> = (0..ngens).map(|_| g.gen_range(1..=3)).collect();
        let gens: Vec<Polynomial> = degrees.iter().map(|&d| random_form(&mut g, &r, d, 6)).collect();
        let i = Ideal::new(&r, gens).unwrap();
        let h = hilbert(&i).unwrap();
        if h.krull_dim != Some(r.nvars() - ngens) {
            // not a complete intersection for this draw
            continue;
        }
        done += 1;
        let want: u64 = degrees.iter().map(|&d| d as u64).product();
        if h.e0 != want {
            return Err(fail("multiplicity", seed, format!("{i}: {} vs {want}", h.e0)));
        }
    }
    enough(done, count)
}

pub fn hilbert_order_independence(count: u64) -> Outcome {
    for seed in 0..count {
        let mut g = rng(9000 + seed);
        let r = qq(3);
        let ngens = g.gen_range(1..=3);
        let i = random_ideal(&mut g, &r, ngens, 3);
        let base = hilbert_data(&i, &TermOrder::DegRevLex).unwrap();
        for order in [TermOrder::Lex, TermOrder::elim(&[1, 2], 4), TermOrder::elim(&[3], 4)] {
            let other = hilbert_data(&i, &order).unwrap();
            if other.numerator != base.numerator {
                return Err(fail("order independence", seed, &i));
            }
        }
    }
    Ok(())
}

pub fn run_all(count: u64) -> Vec<(&'static str, Outcome)> {
    vec![
        ("GB uniqueness and idempotence", gb_uniqueness(count)),
        ("PEI ascending chain", pei_ascending(count)),
        ("PEI degree-wise oracle", pei_oracle(count)),
        ("transform equivariance", transform_equivariance(count)),
        ("independence of y", y_independence(count)),
        ("fibre length criterion", fibre_criterion(count)),
        ("radical certification", radical_certification(count)),
        ("complete intersection multiplicity", complete_intersection(count)),
        ("Hilbert data order independence", hilbert_order_independence(count)),
    ]
}
