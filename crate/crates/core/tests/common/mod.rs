#![allow(dead_code)]

use pei_core::ideal::{eliminate, Ideal, SubringEmbedding};
use pei_core::poly::{ClosedPoint, Field, PolyRing, Ring};

pub mod props;

/// `K[x0, ..., xn]` over the rationals.
pub fn qq(n: usize) -> Ring {
    PolyRing::standard(n, Field::Rational)
}

pub fn ideal(r: &Ring, text: &str) -> Ideal {
    Ideal::parse(r, text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Ideal generated by the listed variables.
pub fn vars(r: &Ring, idx: impl IntoIterator<Item = usize>) -> Ideal {
    let names: Vec<String> = idx.into_iter().map(|i| format!("x{i}")).collect();
    ideal(r, &names.join(", "))
}

pub fn unit_point(r: &Ring, support: &[usize]) -> ClosedPoint {
    ClosedPoint::indicator(r, support).unwrap()
}

/// `I ∩ K[x_i : i not in drop]`, read back in the ambient ring.
pub fn contraction(i: &Ideal, drop: &[usize]) -> Ideal {
    let sub = eliminate(i, drop).unwrap();
    let emb = SubringEmbedding::dropping(i.ring(), drop).unwrap();
    emb.extend(&sub.in_ring(emb.sub()).unwrap()).unwrap()
}

/// Collects failed expectations for one criterion.
#[derive(Default)]
pub struct Checks {
    pub failures: Vec<String>,
    /// Reference values that disagree with an independently certified result.
    pub discrepancies: Vec<String>,
}

impl Checks {
    pub fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    /// The reference value is wrong and `certified` is the value we can prove; the
    /// check fails outright unless `got` is the certified value.
    pub fn erratum<T: PartialEq + std::fmt::Debug>(&mut self, got: T, reference: T, certified: T, what: &str) {
        if got == reference {
            return;
        }
        if got == certified {
            self.discrepancies.push(format!("{what}: reference {reference:?}, computed and certified {got:?}"));
        } else {
            self.failures.push(format!("{what}: got {got:?}, reference {reference:?}, certified {certified:?}"));
        }
    }

    pub fn same_ideal(&mut self, got: &Ideal, want: &Ideal, what: &str) {
        if !got.equals(want) {
            self.failures.push(format!("{what}: got {}, want {want}", got.reduced()));
        }
    }
}
