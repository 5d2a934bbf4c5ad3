//! Monomials in the variables `z0..zn` and the degree reverse lexicographic order.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of variables (`z0..z16`).
pub const MAX_VARS: usize = 17;

/// A dense exponent vector. The total degree and a support bitmask are
/// cached; both are kept consistent by every constructor.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    mask: u32,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        debug_assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
            mask: 0,
            nvars: nvars as u8,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m.mask = 1 << i;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Result<Self> {
        if exps.is_empty() || exps.len() > MAX_VARS {
            return Err(Error::BadVariableCount(exps.len()));
        }
        let mut m = Self::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
            m.deg += e as u32;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub(crate) fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m.mask |= other.mask;
        m
    }

    /// `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other`, assuming `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut m = *self;
        m.mask = 0;
        for i in 0..MAX_VARS {
            m.exps[i] -= other.exps[i];
            if m.exps[i] > 0 {
                m.mask |= 1 << i;
            }
        }
        m.deg -= other.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        m.deg = 0;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m.mask |= other.mask;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        m.deg = 0;
        m.mask = 0;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
            if m.exps[i] > 0 {
                m.mask |= 1 << i;
            }
        }
        m
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    /// Exchange the exponents of two variables.
    pub(crate) fn swap_vars(&self, i: usize, j: usize) -> Monomial {
        let mut m = *self;
        m.exps.swap(i, j);
        let (bi, bj) = ((m.mask >> i) & 1, (m.mask >> j) & 1);
        if bi != bj {
            m.mask ^= (1 << i) | (1 << j);
        }
        m
    }

    /// All monomials of degree `d` in `nvars` variables, in descending
    /// degrevlex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u16; nvars];
        fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left as u16;
                out.push(Monomial::from_exponents(exps).expect("valid nvars"));
                return;
            }
            for e in 0..=left {
                exps[i] = e as u16;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| degrevlex(b, a));
        out
    }
}

/// Degree reverse lexicographic comparison: total degree first, then the
/// monomial with the smaller exponent in the last differing variable is larger.
#[inline]
pub fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..MAX_VARS).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Monomial orders on polynomial rings. Only degrevlex is used for rings;
/// module orders are handled by the Gröbner engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars != b.nvars {
            return Err(Error::VariableCountMismatch(a.nvars(), b.nvars()));
        }
        match self {
            MonomialOrder::Degrevlex => Ok(degrevlex(a, b)),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..self.nvars as usize {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{i}")?;
            } else {
                write!(f, "z{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
