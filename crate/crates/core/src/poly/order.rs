use std::cmp::Ordering;

use super::monomial::Monomial;

/// Monomial orders. `Elim` ranks first by total degree in the marked block,
/// then degrevlex inside the block, then degrevlex on the remaining variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    Elim(Vec<bool>),
}

impl TermOrder {
    /// Elimination order for the variables at `block` in a ring with `nvars` variables.
    pub fn elim(block: &[usize], nvars: usize) -> Self {
        let mut mask = vec![false; nvars];
        for &i in block {
            mask[i] = true;
        }
        TermOrder::Elim(mask)
    }

    pub fn eliminated(&self) -> Vec<usize> {
        match self {
            TermOrder::Elim(mask) => mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect(),
            _ => Vec::new(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exps().cmp(b.exps()),
            TermOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail(a.exps(), b.exps(), |_| true)),
            TermOrder::Elim(mask) => {
                let block_deg = |m: &Monomial| -> u32 {
                    m.exps().iter().zip(mask).filter(|(_, &b)| b).map(|(e, _)| *e).sum()
                };
                let (da, db) = (block_deg(a), block_deg(b));
                da.cmp(&db)
                    .then_with(|| revlex_tail(a.exps(), b.exps(), |i| mask[i]))
                    .then_with(|| {
                        (a.degree() - da)
                            .cmp(&(b.degree() - db))
                            .then_with(|| revlex_tail(a.exps(), b.exps(), |i| !mask[i]))
                    })
            }
        }
    }

    pub fn name(&self, names: &[String]) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::DegRevLex => "degrevlex".into(),
            TermOrder::Elim(_) => {
                let vars: Vec<&str> = self.eliminated().iter().map(|&i| names[i].as_str()).collect();
                format!("elim({})", vars.join(","))
            }
        }
    }
}

/// Reverse-lexicographic tie break on equal-degree vectors restricted to the
/// positions selected by `keep`: the larger monomial has the smaller exponent
/// at the last differing position.
fn revlex_tail(a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    for i in (0..a.len()).rev() {
        if !keep(i) {
            continue;
        }
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}
