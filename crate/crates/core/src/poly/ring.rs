use std::collections::HashSet;
use std::sync::Arc;

use super::field::Field;
use super::order::TermOrder;
use crate::error::{Error, Result};

/// A polynomial ring `field[names...]` with a default term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: Field,
    order: TermOrder,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new(names: Vec<String>, field: Field, order: TermOrder) -> Result<Ring> {
        let mut seen = HashSet::new();
        for n in &names {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not a variable name")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let TermOrder::Elim(mask) = &order {
            if mask.len() != names.len() {
                return Err(Error::DimensionMismatch { expected: names.len(), got: mask.len() });
            }
        }
        Ok(Arc::new(PolyRing { names, field, order }))
    }

    /// `x0, ..., x{n}` over the given field with degrevlex.
    pub fn standard(n: usize, field: Field) -> Ring {
        let names = (0..=n).map(|i| format!("x{i}")).collect();
        Arc::new(PolyRing { names, field, order: TermOrder::DegRevLex })
    }

    pub fn with_names<S: AsRef<str>>(names: &[S], field: Field) -> Result<Ring> {
        PolyRing::new(names.iter().map(|s| s.as_ref().to_string()).collect(), field, TermOrder::DegRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field with a different default order.
    pub fn with_order(self: &Ring, order: TermOrder) -> Ring {
        if self.order == order {
            return self.clone();
        }
        Arc::new(PolyRing { names: self.names.clone(), field: self.field, order })
    }

    /// Same variables and field (orders may differ).
    pub fn compatible(&self, other: &PolyRing) -> bool {
        std::ptr::eq(self, other) || (self.field == other.field && self.names == other.names)
    }

    /// Ring on the variables at `positions` (kept in that order), inheriting degrevlex.
    pub fn subring(&self, positions: &[usize]) -> Ring {
        let names = positions.iter().map(|&p| self.names[p].clone()).collect();
        Arc::new(PolyRing { names, field: self.field, order: TermOrder::DegRevLex })
    }

    /// Ring with `extra` appended as new variables after the existing ones.
    pub fn extended(&self, extra: &[&str], order: TermOrder) -> Result<Ring> {
        let mut names = self.names.clone();
        for e in extra {
            let mut name = e.to_string();
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        PolyRing::new(names, self.field, order)
    }

    pub fn order_name(&self) -> String {
        self.order.name(&self.names)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
