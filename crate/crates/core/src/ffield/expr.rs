//! A small parser for polynomial expressions such as `4T+3`,
//! `x^6 + (3T + 1)x^5 + 2x^4` or `s - 1`, with rational coefficients.
//!
//! Juxtaposition means multiplication (`2Tx^3`), `^` takes a nonnegative
//! integer exponent and `/` is only allowed with a constant divisor.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExtField, Field, Poly, PolyRing, PrimeField, RationalField, Ring};
use crate::error::{Error, Result};

pub const VAR_X: usize = 0;
pub const VAR_T: usize = 1;
pub const VAR_S: usize = 2;

/// Exponents of `(x, T, s)`.
pub type Monomial = [u32; 3];

/// Sparse polynomial in `x`, `T`, `s` over `Q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 3], c);
        }
        Self { terms }
    }

    pub fn var(v: usize) -> Self {
        let mut m = [0; 3];
        m[v] = 1;
        Self { terms: BTreeMap::from([(m, BigRational::one())]) }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m[v]).max().unwrap_or(0)
    }

    pub fn uses(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m[v] > 0)
    }

    /// Coefficients with respect to `v`, low-to-high.
    pub fn coefficients_in(&self, v: usize) -> Vec<MPoly> {
        let n = self.degree_in(v) as usize;
        let mut out = vec![MPoly::default(); if self.terms.is_empty() { 0 } else { n + 1 }];
        for (m, c) in &self.terms {
            let mut rest = *m;
            rest[v] = 0;
            out[m[v] as usize].terms.insert(rest, c.clone());
        }
        out
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; 3]).cloned(),
            _ => None,
        }
    }

    fn add(mut self, other: &MPoly, sign: bool) -> MPoly {
        for (m, c) in &other.terms {
            let c = if sign { c.clone() } else { -c.clone() };
            let entry = self.terms.entry(*m).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
        self
    }

    fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = [m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]];
                out = out.add(&MPoly { terms: BTreeMap::from([(m, c1 * c2)]) }, true);
            }
        }
        out
    }

    fn pow(&self, e: u32) -> MPoly {
        (0..e).fold(MPoly::constant(BigRational::one()), |acc, _| acc.mul(self))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Num(digits.parse().unwrap()));
            }
            'x' => out.push(Tok::Var(VAR_X)),
            'T' => out.push(Tok::Var(VAR_T)),
            's' => out.push(Tok::Var(VAR_S)),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' | '·' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::default();
        let mut sign = true;
        match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                sign = false;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t, sign);
            match self.peek() {
                Some(Tok::Plus) => sign = true,
                Some(Tok::Minus) => sign = false,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let c = d
                        .as_constant()
                        .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
                    if c.is_zero() {
                        return Err(Error::Parse("division by zero".into()));
                    }
                    acc = acc.mul(&MPoly::constant(c.recip()));
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = match self.next() {
            Some(Tok::Num(n)) => MPoly::constant(BigRational::from_integer(n)),
            Some(Tok::Var(v)) => MPoly::var(v),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(Error::Parse("missing ')'".into()));
                }
                e
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                other => return Err(Error::Parse(format!("bad exponent {other:?}"))),
            }
        }
        Ok(base)
    }
}

pub fn parse_expr(s: &str) -> Result<MPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

/// Rings whose elements can be built from a parsed expression.
pub trait FromMPoly: Ring {
    fn from_mpoly(&self, e: &MPoly) -> Result<Self::Elem>;

    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem> {
        self.from_mpoly(&MPoly::constant(q.clone()))
    }

    fn parse(&self, s: &str) -> Result<Self::Elem> {
        self.from_mpoly(&parse_expr(s)?)
    }
}

fn constant_of(e: &MPoly) -> Result<BigRational> {
    e.as_constant()
        .ok_or_else(|| Error::Parse("expected a constant, found a variable".into()))
}

impl FromMPoly for RationalField {
    fn from_mpoly(&self, e: &MPoly) -> Result<BigRational> {
        constant_of(e)
    }
}

impl FromMPoly for PrimeField {
    fn from_mpoly(&self, e: &MPoly) -> Result<u64> {
        let q = constant_of(e)?;
        let p = BigInt::from(self.p());
        if (q.denom() % &p).is_zero() {
            return Err(Error::BadReduction {
                p: self.p(),
                reason: format!("{p} divides the denominator of {q}"),
            });
        }
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        Ok(self.mul(&num, &self.inv(&den).unwrap()))
    }
}

impl FromMPoly for ExtField {
    fn from_mpoly(&self, e: &MPoly) -> Result<Vec<u64>> {
        if e.uses(VAR_X) || e.uses(VAR_T) {
            return Err(Error::Parse("only the generator s may appear in an F_q element".into()));
        }
        let mut acc = self.zero();
        for (k, c) in e.coefficients_in(VAR_S).iter().enumerate() {
            let c = self.base().from_mpoly(c)?;
            let term = self.mul(&self.embed(c), &self.pow(&self.generator(), k as u64));
            acc = self.add(&acc, &term);
        }
        Ok(acc)
    }
}

impl<R: FromMPoly> FromMPoly for PolyRing<R> {
    fn from_mpoly(&self, e: &MPoly) -> Result<Poly<R::Elem>> {
        let v = match self.var() {
            "x" => VAR_X,
            "T" => VAR_T,
            "s" => VAR_S,
            other => return Err(Error::Parse(format!("unknown variable {other}"))),
        };
        let coeffs = e
            .coefficients_in(v)
            .iter()
            .map(|c| self.base().from_mpoly(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.from_coeffs(coeffs))
    }
}
