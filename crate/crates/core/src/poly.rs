//! Polynomials over GF(p) in degrevlex normal form, and their text grammar.
//!
//! The grammar is `z0..z16` variables, decimal integer coefficients, `^` for
//! powers, `*` for products and `+`/`-` between terms, e.g.
//! `z1^3*z2^3 - 12625*z0*z3`. Whitespace is ignored. Printing uses the
//! symmetric representative of each coefficient, so printing then parsing
//! returns the same polynomial.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{degrevlex, Monomial, MAX_VARS};
use crate::rng::Rng;
use std::cmp::Ordering;
use std::fmt;

/// The graded ring GF(p)[z0..zn] with degrevlex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: u8,
    field: PrimeField,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[z0..z{}]", self.field.characteristic(), self.nvars - 1)
    }
}

impl Ring {
    /// Ring of projective `n`-space: variables `z0..zn`.
    pub fn new(p: u64, n: usize) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Self::with_field(field, n)
    }

    pub fn with_field(field: PrimeField, n: usize) -> Result<Self> {
        if n + 1 > MAX_VARS {
            return Err(Error::BadVariableCount(n + 1));
        }
        Ok(Ring {
            nvars: (n + 1) as u8,
            field,
        })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    /// Projective dimension `n` of the ambient space.
    pub fn n(&self) -> usize {
        self.nvars as usize - 1
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::one(self.nvars()), c)]
        };
        Polynomial { ring: *self, terms }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        Polynomial {
            ring: *self,
            terms: vec![(Monomial::var(self.nvars(), i), 1)],
        }
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn monomial(&self, m: Monomial, c: u32) -> Polynomial {
        let terms = if c % self.characteristic() == 0 {
            Vec::new()
        } else {
            vec![(m, c % self.characteristic())]
        };
        Polynomial { ring: *self, terms }
    }

    /// Parse a polynomial in the text grammar.
    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        Parser::new(self, s).parse()
    }

    /// Random homogeneous form of degree `d`: every monomial of degree `d`,
    /// taken in descending degrevlex order, gets an independent uniform
    /// coefficient (possibly zero).
    pub fn random_form(&self, d: u32, rng: &mut Rng) -> Polynomial {
        let p = self.characteristic() as u64;
        let terms = Monomial::all_of_degree(self.nvars(), d)
            .into_iter()
            .filter_map(|m| {
                let c = rng.below(p) as u32;
                (c != 0).then_some((m, c))
            })
            .collect();
        Polynomial { ring: *self, terms }
    }

    pub(crate) fn check(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(format!("{self:?}"), format!("{other:?}")));
        }
        Ok(())
    }
}

/// Homogeneity of a polynomial; the zero polynomial is homogeneous of every degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Any,
    Degree(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn is_homogeneous(self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous)
    }
}

/// An element of GF(p)[z0..zn]: terms strictly descending in degrevlex,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    /// Build from arbitrary terms; sorts and combines.
    pub fn from_terms(ring: Ring, mut terms: Vec<(Monomial, u32)>) -> Polynomial {
        let f = ring.field();
        terms.sort_by(|a, b| degrevlex(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring, terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<(Monomial, u32)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| degrevlex(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { ring, terms }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let Some(first) = self.terms.first() else {
            return Homogeneity::Any;
        };
        let d = first.0.degree();
        if self.terms.iter().all(|t| t.0.degree() == d) {
            Homogeneity::Degree(d)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity().is_homogeneous()
    }

    /// Degree of a homogeneous polynomial (`None` for zero); for
    /// inhomogeneous input the maximal degree.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.add_scaled(other, 1, None))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let m1 = self.ring.field.neg(1);
        Ok(self.add_scaled(other, m1, None))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field;
        let c = c % f.characteristic();
        if c == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.ring.field;
        if c % f.characteristic() == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|&(t, a)| (t.mul(m), f.mul(a, c))).collect(),
        }
    }

    /// `self + c * mono * other`, all in one merge.
    pub(crate) fn add_scaled(&self, other: &Polynomial, c: u32, mono: Option<&Monomial>) -> Polynomial {
        let f = self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let shifted = |t: &(Monomial, u32)| -> (Monomial, u32) {
            let m = match mono {
                Some(x) => t.0.mul(x),
                None => t.0,
            };
            (m, f.mul(t.1, c))
        };
        while i < a.len() && j < b.len() {
            let bt = shifted(&b[j]);
            match degrevlex(&a[i].0, &bt.0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    if bt.1 != 0 {
                        out.push(bt);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a[i].1, bt.1);
                    if s != 0 {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        while j < b.len() {
            let bt = shifted(&b[j]);
            if bt.1 != 0 {
                out.push(bt);
            }
            j += 1;
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let f = self.ring.field;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(m, a) in &self.terms {
            for &(n, b) in &other.terms {
                raw.push((m.mul(&n), f.mul(a, b)));
            }
        }
        Polynomial::from_terms(self.ring, raw)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c)),
        }
    }

    /// Exchange variables `i` and `j`.
    pub(crate) fn swap_vars(&self, i: usize, j: usize) -> Polynomial {
        let terms = self.terms.iter().map(|&(m, c)| (m.swap_vars(i, j), c)).collect();
        Polynomial::from_terms(self.ring, terms)
    }

    /// Evaluate at a point of GF(p)^{n+1}.
    pub fn evaluate(&self, point: &[u32]) -> u32 {
        let f = self.ring.field;
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &x) in point.iter().enumerate().take(self.ring.nvars()) {
                for _ in 0..m.exponent(i) {
                    v = f.mul(v, x);
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = field.to_symmetric(*c);
            let (neg, abs) = (s < 0, s.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, s: &str) -> Self {
        Parser {
            ring,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in `{s}`", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        let p = self.ring.characteristic() as u64;
        let mut v: u64 = 0;
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            v = (v * 10 + c.to_digit(10).unwrap() as u64) % p;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(v)
    }

    fn raw_number(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(c.to_digit(10).unwrap() as u64))
                .ok_or_else(|| self.err("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(v)
    }

    fn parse(mut self) -> Result<Polynomial> {
        let f = self.ring.field();
        let nv = self.ring.nvars();
        if self.chars.is_empty() {
            return Err(self.err("empty input"));
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.pos < self.chars.len() {
            let mut sign = 1u32;
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    sign = f.neg(1);
                    self.pos += 1;
                }
                _ if first => {}
                _ => return Err(self.err("expected `+` or `-`")),
            }
            first = false;
            let mut coef = sign;
            let mut exps = [0u16; MAX_VARS];
            loop {
                match self.peek() {
                    Some(c) if c.is_ascii_digit() => {
                        let v = self.number()? as u32;
                        coef = f.mul(coef, v);
                    }
                    Some('z') => {
                        self.pos += 1;
                        let idx = self.raw_number()? as usize;
                        if idx >= nv {
                            return Err(self.err(&format!("variable z{idx} outside the ring")));
                        }
                        let mut e = 1u64;
                        if self.peek() == Some('^') {
                            self.pos += 1;
                            e = self.raw_number()?;
                        }
                        let total = exps[idx] as u64 + e;
                        if total > u16::MAX as u64 {
                            return Err(self.err("exponent too large"));
                        }
                        exps[idx] = total as u16;
                    }
                    _ => return Err(self.err("expected a factor")),
                }
                if self.peek() == Some('*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
            let m = Monomial::from_exponents(&exps[..nv])?;
            terms.push((m, coef));
        }
        Ok(Polynomial::from_terms(*self.ring, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(32003, 3).unwrap()
    }

    #[test]
    fn cancellation_and_zero() {
        let r = ring();
        let a = r.parse("z0 + z1").unwrap();
        let b = r.var(1).scale(32002);
        assert_eq!(a.add(&b).unwrap(), r.var(0));
        assert!(r.zero().mul(&a).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let a = r.parse("z0+z1").unwrap();
        let b = r.parse("z0-z1").unwrap();
        assert_eq!(a.mul(&b).unwrap(), r.parse("z0^2 - z1^2").unwrap());
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        assert_eq!(r.parse("z0^3+z1^3").unwrap().homogeneity(), Homogeneity::Degree(3));
        assert_eq!(r.parse("z0+z1^2").unwrap().homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(r.zero().homogeneity(), Homogeneity::Any);
    }

    #[test]
    fn parse_print_roundtrip_and_grammar() {
        let r = ring();
        let f = r.parse("z1^3*z2^3 - 12625*z0*z3").unwrap();
        assert_eq!(f.to_string(), "z1^3*z2^3 - 12625*z0*z3");
        let g = r.parse(" 2 * z0 * z0 -3*z1*2 + 7").unwrap();
        assert_eq!(g.to_string(), "2*z0^2 - 6*z1 + 7");
        assert!(r.parse("z4").is_err());
        assert!(r.parse("z0 z1").is_err());
        assert!(r.parse("").is_err());
        assert_eq!(r.parse("0").unwrap(), r.zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring().var(0);
        let b = Ring::new(23, 3).unwrap().var(0);
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn random_form_is_deterministic_and_homogeneous() {
        let r = ring();
        for d in 0..=8 {
            let f = r.random_form(d, &mut Rng::new(7));
            let g = r.random_form(d, &mut Rng::new(7));
            assert_eq!(f, g);
            assert!(matches!(f.homogeneity(), Homogeneity::Degree(x) if x == d) || f.is_zero());
        }
        assert!(r.random_form(0, &mut Rng::new(1)).is_constant());
    }
}
