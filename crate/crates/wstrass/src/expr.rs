//! Polynomial expression parsing for the command line.
//!
//! Grammar: integer and fraction literals, named variables, `+ - * / ^`,
//! parentheses; whitespace-insensitive. Exponents must be nonnegative
//! integer literals and `/` only divides by nonzero constants, so every
//! well-formed input expands to a polynomial with exact rational
//! coefficients. Errors carry the byte position of the offending token.
//!
//! Printing a [`UniPoly`] or [`TernaryForm`] produces a string this parser
//! accepts and maps back to the same value.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::quartic::TernaryForm;
use crate::rational::Rat;

/// Parse a univariate polynomial in the named variable.
pub fn parse_univariate(src: &str, var: &str) -> Result<UniPoly> {
    let m = parse_multi(src, &[var])?;
    let mut coeffs = Vec::new();
    for (exps, c) in m.terms {
        let d = exps[0] as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, Rat::zero());
        }
        coeffs[d] = c;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Parse a trivariate polynomial; the result must be homogeneous to pass
/// through [`TernaryForm::from_terms`].
pub fn parse_ternary(src: &str, vars: [&str; 3]) -> Result<TernaryForm> {
    let m = parse_multi(src, &vars)?;
    TernaryForm::from_terms(m.terms.into_iter().map(|(e, c)| ((e[0], e[1], e[2]), c)))
}

// ---------------------------------------------------------------------------

/// Sparse polynomial in a fixed variable list, used only during parsing.
#[derive(Debug, Clone)]
struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    fn constant(nvars: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MPoly { nvars, terms }
    }

    fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rat::one());
        MPoly { nvars, terms }
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_insert_with(Rat::zero);
            *slot = &*slot + c;
        }
        terms.retain(|_, c| !c.is_zero());
        MPoly { nvars: self.nvars, terms }
    }

    fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let slot = terms.entry(e).or_insert_with(Rat::zero);
                *slot = &*slot + c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MPoly { nvars: self.nvars, terms }
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = MPoly::constant(self.nvars, Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The value as a constant, if it is one.
    fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&x| x == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn tokenize(src: &str, vars: &[&str]) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = &src[start..i];
                match vars.iter().position(|v| *v == name) {
                    Some(idx) => out.push((Tok::Var(idx), start)),
                    None => {
                        return Err(err(
                            start,
                            format!("unknown variable {name:?}; expected one of {vars:?}"),
                        ))
                    }
                }
            }
            other => return Err(err(i, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    nvars: usize,
    src_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.add(&self.term()?.neg());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some((Tok::Star, _)) => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Some((Tok::Slash, p)) => {
                    let p = *p;
                    self.next();
                    let rhs = self.unary()?;
                    let c = rhs.as_constant().ok_or_else(|| {
                        err(p, "division is only defined by nonzero constants")
                    })?;
                    if c.is_zero() {
                        return Err(err(p, "division by zero"));
                    }
                    acc = acc.mul(&MPoly::constant(self.nvars, c.recip()));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some((Tok::Minus, _)) => {
                self.next();
                Ok(self.unary()?.neg())
            }
            Some((Tok::Plus, _)) => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        let mut acc = base;
        while let Some((Tok::Caret, p)) = self.peek() {
            let p = *p;
            self.next();
            match self.next() {
                Some((Tok::Int(n), np)) => {
                    let e = u32::try_from(&n)
                        .map_err(|_| err(np, "exponent too large"))?;
                    acc = acc.pow(e);
                }
                Some((_, np)) => {
                    return Err(err(np, "exponent must be a nonnegative integer literal"))
                }
                None => return Err(err(p + 1, "expected exponent after '^'")),
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.next() {
            Some((Tok::Int(n), _)) => Ok(MPoly::constant(self.nvars, Rat::from_integer(n))),
            Some((Tok::Var(idx), _)) => Ok(MPoly::variable(self.nvars, idx)),
            Some((Tok::LParen, open)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    _ => Err(err(open, "unclosed parenthesis")),
                }
            }
            Some((tok, p)) => Err(err(p, format!("unexpected token {tok:?}"))),
            None => Err(err(self.src_len, "expected an expression")),
        }
    }
}

fn parse_multi(src: &str, vars: &[&str]) -> Result<MPoly> {
    let toks = tokenize(src, vars)?;
    let mut parser = Parser { toks, pos: 0, nvars: vars.len(), src_len: src.len() };
    let value = parser.expr()?;
    if let Some((tok, p)) = parser.peek() {
        return Err(err(*p, format!("trailing input starting at {tok:?}")));
    }
    Ok(value)
}
