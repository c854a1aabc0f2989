//! Text parser for polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly  := ["+"|"-"] term (("+"|"-") term)*
//! term  := coeff | coeff "*" mono | mono
//! mono  := power ("*" power)*
//! power := var | var "^" int
//! coeff := int | int "/" int
//! ```

use num_bigint::BigInt;

use super::field::FieldScalar;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax { position: start, message: format!("unexpected character `{other}`") })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn coeff(&mut self) -> Result<FieldScalar> {
        let num = self.int()?;
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let den = self.int()?;
            return self.ring.field().from_fraction(&num, &den);
        }
        Ok(self.ring.field().from_bigint(&num))
    }

    fn power(&mut self, exps: &mut [u32]) -> Result<()> {
        let name = match self.peek() {
            Some(Tok::Ident(n)) => n.clone(),
            _ => return self.err("expected a variable"),
        };
        let idx = self.ring.var_index(&name).ok_or(Error::UnknownVariable(name))?;
        self.pos += 1;
        let mut e = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.offset();
            let v = self.int()?;
            e = v.try_into().map_err(|_| Error::Syntax { position: at, message: "exponent too large".into() })?;
        }
        exps[idx] += e;
        Ok(())
    }

    fn term(&mut self) -> Result<(FieldScalar, Monomial)> {
        let n = self.ring.nvars();
        let mut exps = vec![0u32; n];
        let mut c = self.ring.field().one();
        let mut need_power = true;
        if matches!(self.peek(), Some(Tok::Int(_))) {
            c = self.coeff()?;
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                need_power = false;
            }
        }
        if need_power {
            self.power(&mut exps)?;
            while self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                self.power(&mut exps)?;
            }
        }
        Ok((c, Monomial::new(exps)))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign_neg = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                sign_neg = true;
                self.pos += 1
            }
            None => return self.err("empty polynomial"),
            _ => {}
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((if sign_neg { -c } else { c }, m));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => sign_neg = false,
                Some(Tok::Minus) => sign_neg = true,
                Some(_) => return self.err("expected `+` or `-`"),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), ring };
    p.poly()
}
