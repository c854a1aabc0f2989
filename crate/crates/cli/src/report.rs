use serde_json::{Map, Value};

use pei_core::{ClosedPoint, Ideal};

pub enum Item {
    Int(i64),
    Bool(bool),
    Text(String),
    Ideal(Vec<String>),
}

/// Ordered key/value report: text output keeps insertion order, JSON sorts keys.
#[derive(Default)]
pub struct Report {
    headline: Option<String>,
    items: Vec<(String, Item)>,
    /// Keys emitted only in JSON, because the headline already shows them.
    json_only: Vec<String>,
}

type NaturalKey = Vec<(String, u64)>;

/// Text split into digit and non-digit runs, digits compared as numbers, so x2 < x10.
fn natural_key(s: &str) -> NaturalKey {
    let mut key = Vec::new();
    let mut text = String::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            let mut n = 0u64;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                n = n.saturating_mul(10).saturating_add(d as u64);
                chars.next();
            }
            key.push((std::mem::take(&mut text), n));
        } else {
            text.push(c);
            chars.next();
        }
    }
    key.push((text, 0));
    key
}

/// Reduced basis under the ring order, sorted by degree and then naturally.
pub fn generators(i: &Ideal) -> Vec<String> {
    let gb = i.default_gb();
    let mut gens: Vec<(u32, NaturalKey, String)> = gb
        .gens()
        .iter()
        .map(|g| {
            let s = g.to_string();
            (g.total_degree().unwrap_or(0), natural_key(&s), s)
        })
        .collect();
    gens.sort();
    if gens.is_empty() {
        return vec!["0".into()];
    }
    gens.into_iter().map(|(_, _, s)| s).collect()
}


pub fn point_text(p: &ClosedPoint) -> String {
    ClosedPoint::new(p.ring(), p.normalized()).map(|q| q.to_string()).unwrap_or_else(|_| p.to_string())
}

impl Report {
    pub fn int(&mut self, key: &str, v: impl TryInto<i64>) -> &mut Self {
        let v = v.try_into().unwrap_or(i64::MAX);
        self.items.push((key.into(), Item::Int(v)));
        self
    }

    pub fn bool(&mut self, key: &str, v: bool) -> &mut Self {
        self.items.push((key.into(), Item::Bool(v)));
        self
    }

    pub fn text(&mut self, key: &str, v: impl Into<String>) -> &mut Self {
        self.items.push((key.into(), Item::Text(v.into())));
        self
    }

    pub fn ideal(&mut self, key: &str, i: &Ideal) -> &mut Self {
        self.items.push((key.into(), Item::Ideal(generators(i))));
        self
    }

    /// A summary line printed first in text mode and absent from JSON.
    pub fn headline(&mut self, line: impl Into<String>) -> &mut Self {
        self.headline = Some(line.into());
        self
    }

    pub fn json_int(&mut self, key: &str, v: impl TryInto<i64>) -> &mut Self {
        self.json_only.push(key.into());
        self.int(key, v)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(h) = &self.headline {
            out.push_str(h);
            out.push('\n');
        }
        for (k, v) in self.items.iter().filter(|(k, _)| !self.json_only.contains(k)) {
            match v {
                Item::Int(n) => out.push_str(&format!("{k} {n}\n")),
                Item::Bool(b) => out.push_str(&format!("{k} {b}\n")),
                Item::Text(s) => out.push_str(&format!("{k} {s}\n")),
                Item::Ideal(gens) => {
                    out.push_str(&format!("{k}:\n"));
                    for g in gens {
                        out.push_str(&format!("  {g}\n"));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        // serde_json's default map is a BTreeMap, so keys come out sorted
        let mut map = Map::new();
        for (k, v) in &self.items {
            let value = match v {
                Item::Int(n) => Value::from(*n),
                Item::Bool(b) => Value::from(*b),
                Item::Text(s) => Value::from(s.as_str()),
                Item::Ideal(gens) => Value::from(gens.clone()),
            };
            map.insert(k.replace(' ', "_"), value);
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(map)).unwrap();
        s.push('\n');
        s
    }
}
