//! Text syntax for elements and polynomials.
//!
//! ```text
//! expr    := product ('+' product)*
//! product := power ('*' power)*
//! power   := atom ('^' digits)?
//! atom    := literal | variable | '(' expr ')'
//! literal := '-inf' | '-'? digits ('/' digits)? 'v'?
//! variable:= 'x' | 'y' | 'z' | 'x' digits
//! ```

use num_bigint::BigInt;
use thiserror::Error;

use crate::kernel::{NuElement, RatElem, Q};
use crate::poly::TropPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Lit(RatElem),
    Var(usize, bool),
    Plus,
    Star,
    Caret,
    Open,
    Close,
    Nat(u32),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < b.len() && b[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'*' => out.push((start, Tok::Star)),
            b'(' => out.push((start, Tok::Open)),
            b')' => out.push((start, Tok::Close)),
            b'^' => {
                let j = digits(i + 1);
                if j == i + 1 {
                    return err(i, "expected an exponent after `^`");
                }
                let n: u32 = text[i + 1..j].parse().or_else(|_| err(i, "exponent too large"))?;
                out.push((start, Tok::Caret));
                out.push((i + 1, Tok::Nat(n)));
                i = j;
                continue;
            }
            b'x' | b'y' | b'z' => {
                let j = digits(i + 1);
                if c == b'x' && j > i + 1 {
                    let k: usize = text[i + 1..j].parse().or_else(|_| err(i, "bad variable index"))?;
                    if k == 0 {
                        return err(i, "variables are numbered from x1");
                    }
                    out.push((start, Tok::Var(k - 1, true)));
                } else if j > i + 1 {
                    return err(i, "only x takes a numeric index");
                } else {
                    out.push((start, Tok::Var((c - b'x') as usize, false)));
                }
                i = j;
                continue;
            }
            b'-' | b'0'..=b'9' => {
                let (lit, j) = lex_literal(text, i)?;
                out.push((start, Tok::Lit(lit)));
                i = j;
                continue;
            }
            _ => return err(i, format!("unexpected character `{}`", c as char)),
        }
        i += 1;
    }
    Ok(out)
}

/// Reads a literal starting at byte `i`; returns it and the end offset.
fn lex_literal(text: &str, i: usize) -> Result<(RatElem, usize), ParseError> {
    let b = text.as_bytes();
    if text[i..].starts_with("-inf") {
        return Ok((NuElement::Zero, i + 4));
    }
    let mut j = i;
    if b[j] == b'-' {
        j += 1;
    }
    let num_start = j;
    while j < b.len() && b[j].is_ascii_digit() {
        j += 1;
    }
    if j == num_start {
        return err(i, "expected digits or `-inf`");
    }
    let numer: BigInt = text[i..j].parse().unwrap();
    let mut denom = BigInt::from(1);
    if j < b.len() && b[j] == b'/' {
        let d0 = j + 1;
        j = d0;
        while j < b.len() && b[j].is_ascii_digit() {
            j += 1;
        }
        if j == d0 {
            return err(d0, "expected a denominator");
        }
        denom = text[d0..j].parse().unwrap();
        if denom == BigInt::from(0) {
            return err(d0, "zero denominator");
        }
    }
    let v = Q::new(numer, denom);
    if j < b.len() && b[j] == b'v' {
        Ok((NuElement::Ghost(v), j + 1))
    } else {
        Ok((NuElement::Tangible(v), j))
    }
}

/// Parses a single element literal such as `3/2`, `3/2v` or `-inf`.
pub fn parse_elem(text: &str) -> Result<RatElem, ParseError> {
    let t = text.trim();
    if t.is_empty() {
        return err(0, "empty literal");
    }
    let (e, j) = lex_literal(t, 0)?;
    if j != t.len() {
        return err(j, "trailing characters after literal");
    }
    Ok(e)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    nvars: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<TropPoly, ParseError> {
        let mut acc = self.product()?;
        while self.peek() == Some(&Tok::Plus) {
            self.i += 1;
            acc = acc.p_add(&self.product()?).unwrap();
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<TropPoly, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Tok::Star) {
            self.i += 1;
            acc = acc.p_mul(&self.power()?).unwrap();
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<TropPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.i += 1;
            match self.peek() {
                Some(Tok::Nat(n)) => {
                    let n = *n;
                    self.i += 1;
                    if n == 0 {
                        return Ok(TropPoly::constant(self.nvars, RatElem::one()));
                    }
                    return Ok(base.pow(n));
                }
                _ => return err(self.pos(), "expected an exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<TropPoly, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Lit(c)) => {
                self.i += 1;
                Ok(TropPoly::constant(self.nvars, c))
            }
            Some(Tok::Var(k, _)) => {
                self.i += 1;
                Ok(TropPoly::var(self.nvars, k))
            }
            Some(Tok::Open) => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return err(self.pos(), "expected `)`");
                }
                self.i += 1;
                Ok(e)
            }
            Some(_) => err(pos, "expected a literal, variable or `(`"),
            None => err(pos, "unexpected end of input"),
        }
    }
}

/// Parses a polynomial; the number of variables is the largest index used
/// (at least one).
pub fn parse_poly(text: &str) -> Result<TropPoly, ParseError> {
    parse_poly_in(text, 0)
}

/// Parses a polynomial in at least `min_vars` variables.
pub fn parse_poly_in(text: &str, min_vars: usize) -> Result<TropPoly, ParseError> {
    let toks = lex(text)?;
    let mut letters = false;
    let mut indexed = false;
    let mut nvars = min_vars.max(1);
    for (pos, t) in &toks {
        if let Tok::Var(k, ix) = t {
            if *ix {
                indexed = true;
            } else {
                letters = true;
            }
            if letters && indexed {
                return err(*pos, "cannot mix x,y,z with x1..xn");
            }
            nvars = nvars.max(k + 1);
        }
    }
    if toks.is_empty() {
        return err(0, "empty polynomial");
    }
    let mut p = Parser { toks, i: 0, nvars, end: text.len() };
    let out = p.expr()?;
    if p.i != p.toks.len() {
        return err(p.pos(), "unexpected token");
    }
    Ok(out)
}
