//! Problem files: a ring, an optional order, one ideal and any number of named points.
//!
//! ```text
//! ring QQ [x0..x4]
//! order degrevlex
//! ideal I = x0^4 + x1^2*x2^2, x0^2*x1 - x3^3,
//!     x2^2 - x3^2
//! point p = (1:0:0:0:0)
//! point q = forms x0, x1, x2, x4
//! ```

use std::collections::BTreeMap;

use pei_core::poly::parse_polynomials;
use pei_core::{ClosedPoint, Field, Ideal, PolyRing, Ring, TermOrder};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

pub struct Problem {
    pub ring: Ring,
    pub ideal: Ideal,
    pub points: BTreeMap<String, ClosedPoint>,
}

impl Problem {
    /// A point given on the command line: a name from the file or a literal.
    pub fn point(&self, spec: &str) -> Result<ClosedPoint, String> {
        if let Some(p) = self.points.get(spec.trim()) {
            return Ok(p.clone());
        }
        parse_point(&self.ring, spec)
    }

    pub fn centre(&self) -> Result<ClosedPoint, String> {
        self.points.get("p").cloned().ok_or_else(|| "the file defines no point p".to_string())
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Join continuation lines (those starting with whitespace) onto their statement.
fn statements(text: &str) -> Vec<(usize, String)> {
    let mut out: Vec<(usize, String)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap();
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            if let Some(last) = out.last_mut() {
                last.1.push(' ');
                last.1.push_str(line.trim());
                continue;
            }
        }
        out.push((n + 1, line.trim().to_string()));
    }
    out
}

pub fn parse_problem(text: &str) -> Result<Problem, ParseError> {
    let mut ring_decl: Option<(usize, Field, Vec<String>)> = None;
    let mut order_decl: Option<(usize, String)> = None;
    let mut ideal_decl: Option<(usize, String)> = None;
    let mut point_decls: Vec<(usize, String, String)> = Vec::new();
    for (line, stmt) in statements(text) {
        let (head, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt.as_str(), ""));
        let rest = rest.trim();
        match head {
            "ring" => ring_decl = Some(parse_ring(line, rest)?),
            "order" => order_decl = Some((line, rest.to_string())),
            "ideal" => {
                let (_, body) = rest.split_once('=').ok_or_else(|| err(line, "expected `ideal NAME = ...`"))?;
                ideal_decl = Some((line, body.trim().to_string()));
            }
            "point" => {
                let (name, body) = rest.split_once('=').ok_or_else(|| err(line, "expected `point NAME = ...`"))?;
                point_decls.push((line, name.trim().to_string(), body.trim().to_string()));
            }
            other => return Err(err(line, format!("unknown statement `{other}`"))),
        }
    }
    let (ring_line, field, names) = ring_decl.ok_or_else(|| err(1, "missing `ring` line"))?;
    let order = match &order_decl {
        Some((line, text)) => parse_order(*line, text, &names)?,
        None => TermOrder::DegRevLex,
    };
    let ring = PolyRing::new(names, field, order).map_err(|e| err(ring_line, e.to_string()))?;
    let (ideal_line, body) = ideal_decl.ok_or_else(|| err(ring_line, "missing `ideal` line"))?;
    let gens = parse_polynomials(&body, &ring).map_err(|e| err(ideal_line, e.to_string()))?;
    let ideal = Ideal::new(&ring, gens).map_err(|e| err(ideal_line, e.to_string()))?;
    let mut points = BTreeMap::new();
    for (line, name, body) in point_decls {
        let p = parse_point(&ring, &body).map_err(|m| err(line, m))?;
        points.insert(name, p);
    }
    Ok(Problem { ring, ideal, points })
}

fn parse_ring(line: usize, rest: &str) -> Result<(usize, Field, Vec<String>), ParseError> {
    let open = rest.find('[').ok_or_else(|| err(line, "expected `ring FIELD [vars]`"))?;
    let close = rest.rfind(']').ok_or_else(|| err(line, "unclosed variable list"))?;
    let field_text: Vec<&str> = rest[..open].split_whitespace().collect();
    let field = match field_text.as_slice() {
        ["QQ"] => Field::Rational,
        ["Fp", q] => {
            let q: u32 = q.parse().map_err(|_| err(line, format!("`{q}` is not a prime")))?;
            Field::prime(q).map_err(|e| err(line, e.to_string()))?
        }
        _ => return Err(err(line, format!("unknown field `{}`", field_text.join(" ")))),
    };
    let mut names = Vec::new();
    for item in rest[open + 1..close].split(',').map(str::trim).filter(|s| !s.is_empty()) {
        names.extend(expand_range(item).ok_or_else(|| err(line, format!("bad variable range `{item}`")))?);
    }
    if names.is_empty() {
        return Err(err(line, "empty variable list"));
    }
    Ok((line, field, names))
}

/// `x0..x10` expands to `x0, ..., x10`; a plain name stands for itself.
fn expand_range(item: &str) -> Option<Vec<String>> {
    let Some((a, b)) = item.split_once("..") else {
        return Some(vec![item.to_string()]);
    };
    let split = |s: &str| {
        let at = s.find(|c: char| c.is_ascii_digit())?;
        Some((s[..at].to_string(), s[at..].parse::<usize>().ok()?))
    };
    let (pa, lo) = split(a.trim())?;
    let (pb, hi) = split(b.trim())?;
    if pa != pb || lo > hi {
        return None;
    }
    Some((lo..=hi).map(|i| format!("{pa}{i}")).collect())
}

fn parse_order(line: usize, text: &str, names: &[String]) -> Result<TermOrder, ParseError> {
    match text.trim() {
        "lex" => Ok(TermOrder::Lex),
        "degrevlex" => Ok(TermOrder::DegRevLex),
        t if t.starts_with("elim(") && t.ends_with(')') => {
            let mut block = Vec::new();
            for v in t[5..t.len() - 1].split(',').map(str::trim) {
                let i = names.iter().position(|n| n == v).ok_or_else(|| err(line, format!("unknown variable `{v}`")))?;
                block.push(i);
            }
            Ok(TermOrder::elim(&block, names.len()))
        }
        t => Err(err(line, format!("unknown order `{t}`"))),
    }
}

/// `(c0:...:cn)` or `forms f1, ..., fn`.
pub fn parse_point(ring: &Ring, text: &str) -> Result<ClosedPoint, String> {
    let text = text.trim();
    if let Some(body) = text.strip_prefix("forms") {
        let forms = parse_polynomials(body, ring).map_err(|e| e.to_string())?;
        return ClosedPoint::from_forms(ring, &forms).map_err(|e| e.to_string());
    }
    let body = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(|| format!("bad point `{text}`"))?;
    let mut coords = Vec::new();
    for c in body.split(':') {
        let f = pei_core::poly::parse_polynomial(c, ring).map_err(|e| e.to_string())?;
        if !f.is_constant() && !f.is_zero() {
            return Err(format!("coordinate `{}` is not a constant", c.trim()));
        }
        coords.push(f.leading_coeff().cloned().unwrap_or_else(|| ring.field().zero()));
    }
    ClosedPoint::new(ring, coords).map_err(|e| e.to_string())
}
