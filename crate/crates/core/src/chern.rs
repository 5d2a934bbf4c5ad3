//! Twist bookkeeping for Buchsbaum-Rim kernels: Chern coefficients, degree
//! formulas and the expected shapes of resolutions.
//!
//! Shapes are returned as [`BettiTable`]s in generator degrees, step 0 being
//! the generators of the ideal: a summand `R(e)` contributes degree `-e`.

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// `F = ⊕ R(a_i)`, `G = ⊕ R(b_j)`, `P = ⊕ R(p_k)` on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub p: Vec<i64>,
    pub n: usize,
}

impl TwistSpec {
    /// With `P = R`.
    pub fn new(a: Vec<i64>, b: Vec<i64>, n: usize) -> Result<Self> {
        Self::with_p(a, b, vec![0], n)
    }

    pub fn with_p(a: Vec<i64>, b: Vec<i64>, p: Vec<i64>, n: usize) -> Result<Self> {
        let s = TwistSpec { a, b, p, n };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let (f, g, q) = (self.a.len(), self.b.len(), self.p.len());
        if g < 1 || f <= g {
            return Err(Error::InvalidSpec(format!("need f > g >= 1, got f = {f}, g = {g}")));
        }
        if q < 1 || q >= f - g {
            return Err(Error::InvalidSpec(format!("need 1 <= q < r, got q = {q}, r = {}", f - g)));
        }
        Ok(())
    }

    pub fn f(&self) -> usize {
        self.a.len()
    }

    pub fn g(&self) -> usize {
        self.b.len()
    }

    pub fn t(&self) -> usize {
        self.b.len()
    }

    pub fn q(&self) -> usize {
        self.p.len()
    }

    pub fn r(&self) -> usize {
        self.a.len() - self.b.len()
    }

    pub fn c1(&self) -> i64 {
        self.a.iter().sum::<i64>() - self.b.iter().sum::<i64>()
    }
}

/// Elementary symmetric function `s_i` of `values`.
pub fn elementary_symmetric(values: &[i64], i: usize) -> Result<BigInt> {
    if i > values.len() {
        return Err(Error::OutOfRange {
            index: i,
            len: values.len(),
        });
    }
    Ok(elementary_all(values).swap_remove(i))
}

/// `s_0 .. s_len` at once: coefficients of `prod (1 + v x)`.
fn elementary_all(values: &[i64]) -> Vec<BigInt> {
    let mut s = vec![BigInt::one()];
    for &v in values {
        let mut next = vec![BigInt::zero(); s.len() + 1];
        for (k, c) in s.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * v;
        }
        s = next;
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernReport {
    /// `c_0 .. c_n` of the kernel sheaf.
    pub c: Vec<BigInt>,
    pub c1: BigInt,
    /// `c_r`, the degree of the top part of a regular section's zero locus.
    pub expected_degree: BigInt,
}

/// `c(F) / c(G)` as a power series truncated after `ω^n`.
pub fn chern_coefficients(spec: &TwistSpec) -> ChernReport {
    let n = spec.n;
    let num = elementary_all(&spec.a);
    let den = elementary_all(&spec.b);
    let at = |v: &Vec<BigInt>, k: usize| v.get(k).cloned().unwrap_or_else(BigInt::zero);
    // den[0] = 1, so c_k = num_k - sum_{j>=1} den_j c_{k-j}
    let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut v = at(&num, k);
        for j in 1..=k {
            v -= at(&den, j) * &c[k - j];
        }
        c.push(v);
    }
    let r = spec.r();
    ChernReport {
        c1: at(&c, 1),
        expected_degree: at(&c, r),
        c,
    }
}

/// Closed form of `c_3` for `r = 3`, by the number `t` of twists of `G`.
pub fn degree_formula_r3(a: &[i64], b: &[i64]) -> Result<BigInt> {
    degree_r3(a, b, false)
}

/// The `t >= 3` row with the sign of the `s_1(b)^2 s_1(a)` term as it is
/// usually printed (negative). It disagrees with the power series; kept for
/// the comparison in the tests.
pub fn degree_formula_r3_as_printed(a: &[i64], b: &[i64]) -> Result<BigInt> {
    degree_r3(a, b, true)
}

fn degree_r3(a: &[i64], b: &[i64], printed_sign: bool) -> Result<BigInt> {
    if b.is_empty() || a.len() != b.len() + 3 {
        return Err(Error::InvalidSpec(format!(
            "need len(a) = len(b) + 3 with len(b) >= 1, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let sa = elementary_all(a);
    let (s1a, s2a, s3a) = (&sa[1], &sa[2], &sa[3]);
    let big = |x: i64| BigInt::from(x);
    Ok(match b.len() {
        1 => {
            let b1 = big(b[0]);
            s3a - &b1 * s2a + &b1 * &b1 * s1a - &b1 * &b1 * &b1
        }
        2 => {
            let (b1, b2) = (big(b[0]), big(b[1]));
            s3a - (&b1 + &b2) * s2a + (&b1 * &b1 + &b1 * &b2 + &b2 * &b2) * s1a
                - (&b1 * &b1 * &b1 + &b1 * &b1 * &b2 + &b1 * &b2 * &b2 + &b2 * &b2 * &b2)
        }
        _ => {
            let sb = elementary_all(b);
            let (s1b, s2b, s3b) = (&sb[1], &sb[2], &sb[3]);
            let sq = s1b * s1b * s1a;
            let base = s3a - s3b - s1a * s2b - s2a * s1b + BigInt::from(2) * s1b * s2b - s1b * s1b * s1b;
            if printed_sign {
                base - sq
            } else {
                base + sq
            }
        }
    })
}

/// Multiset of twists.
type Twists = BTreeMap<i64, usize>;

fn single(e: i64) -> Twists {
    BTreeMap::from([(e, 1)])
}

/// Twists of `∧^i` of `⊕ R(v)`: sums over `i`-subsets.
pub fn wedge_twists(values: &[i64], i: usize) -> BTreeMap<i64, usize> {
    // dp[k] = multiset of sums over k-subsets of the prefix
    let mut dp: Vec<Twists> = vec![single(0)];
    for &v in values {
        let mut next = dp.clone();
        next.push(Twists::new());
        for (k, m) in dp.iter().enumerate() {
            for (&e, &c) in m {
                *next[k + 1].entry(e + v).or_insert(0) += c;
            }
        }
        dp = next;
    }
    dp.get(i).cloned().unwrap_or_default()
}

/// Twists of `S^j` of `⊕ R(v)`: sums over `j`-multisubsets.
pub fn sym_twists(values: &[i64], j: usize) -> BTreeMap<i64, usize> {
    let mut dp: Vec<Twists> = vec![Twists::new(); j + 1];
    dp[0] = single(0);
    for &v in values {
        // allow any number of copies of v
        for k in 1..=j {
            let prev = dp[k - 1].clone();
            for (e, c) in prev {
                *dp[k].entry(e + v).or_insert(0) += c;
            }
        }
    }
    dp.swap_remove(j)
}

fn tensor(x: &Twists, y: &Twists) -> Twists {
    let mut out = Twists::new();
    for (&a, &m) in x {
        for (&b, &n) in y {
            *out.entry(a + b).or_insert(0) += m * n;
        }
    }
    out
}

fn shift(x: &Twists, s: i64) -> Twists {
    x.iter().map(|(&e, &c)| (e + s, c)).collect()
}

fn add_summands(table: &mut BettiTable, step: usize, x: &Twists) {
    for (&e, &c) in x {
        table.add(step, -e as i32, c);
    }
}

/// `0 -> R(-c1) -> F(-c1) ⊕ G* -> G(-c1) ⊕ F* -> I_X -> 0` for `r = 3`.
pub fn expected_resolution_theorem1(a: &[i64], b: &[i64]) -> Result<BettiTable> {
    if b.is_empty() || a.len() != b.len() + 3 {
        return Err(Error::InvalidSpec(format!(
            "need len(a) = len(b) + 3 with len(b) >= 1, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let c1 = a.iter().sum::<i64>() - b.iter().sum::<i64>();
    let mut t = BettiTable::new();
    for &bj in b {
        t.add(0, (c1 - bj) as i32, 1);
        t.add(1, bj as i32, 1);
    }
    for &ai in a {
        t.add(0, ai as i32, 1);
        t.add(1, (c1 - ai) as i32, 1);
    }
    t.add(2, c1 as i32, 1);
    Ok(t)
}

/// The resolution `0 -> A_r ⊕ C_r -> ... -> A_1 ⊕ C_1 -> I_X ⊗ ∧^q P* -> 0`,
/// untwisted by `∧^q P*` so that step 0 lists generator degrees of `I_X`.
pub fn expected_resolution_general(spec: &TwistSpec) -> BettiTable {
    let (f, g, q, r) = (spec.f(), spec.g(), spec.q() as i64, spec.r() as i64);
    let a_dual: Vec<i64> = spec.a.iter().map(|x| -x).collect();
    let b_dual: Vec<i64> = spec.b.iter().map(|x| -x).collect();
    let global = -spec.a.iter().sum::<i64>() + spec.b.iter().sum::<i64>();
    let p_sum: i64 = spec.p.iter().sum();
    let mut table = BettiTable::new();
    for k in 1..=r {
        let mut step = Twists::new();
        // A_k: i + 2j = k + q - 1, q <= i + j <= (r + q - 1) / 2
        for j in 0..=(k + q - 1) / 2 {
            let i = k + q - 1 - 2 * j;
            if i < 0 || i as usize > f || i + j < q || 2 * (i + j) > r + q - 1 {
                continue;
            }
            let m = tensor(
                &tensor(&wedge_twists(&a_dual, i as usize), &sym_twists(&b_dual, j as usize)),
                &sym_twists(&spec.p, (i + j - q) as usize),
            );
            for (e, c) in m {
                *step.entry(e).or_insert(0) += c;
            }
        }
        // C_k: i + 2j = r + 1 - q - k, i + j <= (r - q) / 2
        let total = r + 1 - q - k;
        if total >= 0 {
            for j in 0..=total / 2 {
                let i = total - 2 * j;
                if i as usize > f || 2 * (i + j) > r - q {
                    continue;
                }
                let m = tensor(
                    &tensor(&wedge_twists(&spec.a, i as usize), &sym_twists(&spec.b, j as usize)),
                    &sym_twists(&spec.p, (r - q - i - j) as usize),
                );
                for (e, c) in shift(&m, global) {
                    *step.entry(e).or_insert(0) += c;
                }
            }
        }
        // untwist by ∧^q P* = R(-sum p)
        add_summands(&mut table, (k - 1) as usize, &shift(&step, p_sum));
    }
    let _ = g;
    table
}

/// Data of a generalized Buchsbaum-Rim sheaf: `E_1 = ⊕ R(e1)`,
/// `E_2 = ⊕ R(e2)`, complete intersection degrees `d_i`, `l` with
/// `O_G = ω_G(l)`, and the twist `d > max d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenBRSpec {
    pub e1: Vec<i64>,
    pub e2: Vec<i64>,
    pub ds: [i64; 3],
    pub l: i64,
    pub d: i64,
    pub n: usize,
}

impl GenBRSpec {
    pub fn new(e1: Vec<i64>, e2: Vec<i64>, ds: [i64; 3], l: i64, d: i64, n: usize) -> Result<Self> {
        if e1.len() != e2.len() {
            return Err(Error::InvalidSpec(format!(
                "E_1 and E_2 need the same rank, got {} and {}",
                e1.len(),
                e2.len()
            )));
        }
        let m = *ds.iter().max().unwrap();
        if d <= m {
            return Err(Error::InvalidSpec(format!("need d > max d_i = {m}, got d = {d}")));
        }
        Ok(GenBRSpec { e1, e2, ds, l, d, n })
    }

    pub fn alpha(&self) -> i64 {
        self.ds.iter().sum()
    }

    /// `b = 2d - α - l + 4`.
    pub fn b(&self) -> i64 {
        2 * self.d - self.alpha() - self.l + 4
    }

    /// The resolution is only established on `P^3`.
    pub fn is_verified_range(&self) -> bool {
        self.n == 3
    }

    /// Degrees of the four generators of `I_Z(s)`: `d - d_i` and `d - α - l + 4`.
    pub fn generator_degrees(&self) -> [i64; 4] {
        let [d1, d2, d3] = self.ds;
        [self.d - d1, self.d - d2, self.d - d3, self.d - self.alpha() - self.l + 4]
    }
}

/// `0 -> R(α-d-b) ⊕ E1*(-b) -> ⊕R(d_i-b) ⊕ R(-d) ⊕ E2*(-b) -> ⊕R(d_i-d) ⊕ R(d-b) -> I_Z(s) -> 0`.
pub fn expected_resolution_theorem5(spec: &GenBRSpec) -> BettiTable {
    let (d, b, alpha) = (spec.d, spec.b(), spec.alpha());
    let mut t = BettiTable::new();
    for &di in &spec.ds {
        t.add(0, (d - di) as i32, 1);
        t.add(1, (b - di) as i32, 1);
    }
    t.add(0, (b - d) as i32, 1);
    t.add(1, d as i32, 1);
    for &e in &spec.e2 {
        t.add(1, (e + b) as i32, 1);
    }
    t.add(2, (d + b - alpha) as i32, 1);
    for &e in &spec.e1 {
        t.add(2, (e + b) as i32, 1);
    }
    t
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVectorReport {
    pub symmetric: bool,
    pub sum: i64,
}

pub fn h_vector_checks(h: &[i64]) -> HVectorReport {
    HVectorReport {
        symmetric: crate::groebner::h_vector_is_symmetric(h),
        sum: h.iter().sum(),
    }
}

/// Informational Cohen-Macaulay type bound `1 + binom(r/2 + g - 1, g - 1)`
/// for `r + q` odd (not checked anywhere).
pub fn cm_type_bound(spec: &TwistSpec) -> i64 {
    let top = (spec.r() / 2 + spec.g() - 1) as i64;
    1 + crate::groebner::binomial_poly(top, (spec.g() - 1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn symmetric_functions() {
        assert_eq!(elementary_symmetric(&[4, 5], 0).unwrap(), big(1));
        assert_eq!(elementary_symmetric(&[6; 5], 2).unwrap(), big(360));
        assert_eq!(elementary_symmetric(&[2; 4], 3).unwrap(), big(32));
        assert!(elementary_symmetric(&[1, 2], 3).is_err());
    }

    #[test]
    fn wedge_and_symmetric_twists() {
        assert_eq!(wedge_twists(&[1, 2, 3], 2), BTreeMap::from([(3, 1), (4, 1), (5, 1)]));
        assert_eq!(sym_twists(&[1, 2], 2), BTreeMap::from([(2, 1), (3, 1), (4, 1)]));
        assert_eq!(sym_twists(&[5], 0), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn theorem1_direct_substitution() {
        let t = expected_resolution_theorem1(&[1, 1, 1, 1], &[1]).unwrap();
        assert_eq!(t, BettiTable::from_steps(&[&[(2, 1), (1, 4)], &[(2, 4), (1, 1)], &[(3, 1)]]));
        assert_eq!(t.alternating_rank_sum(), 0);
    }

    #[test]
    fn chern_c1_is_difference_of_sums() {
        let s = TwistSpec::new(vec![1, 4, 2, 7], vec![3], 5).unwrap();
        assert_eq!(chern_coefficients(&s).c1, big(11));
        assert_eq!(chern_coefficients(&s).c[0], big(1));
    }

    #[test]
    fn spec_validation() {
        assert!(TwistSpec::new(vec![1, 1], vec![1, 1], 3).is_err());
        assert!(TwistSpec::with_p(vec![1; 4], vec![1], vec![0, 0, 0], 3).is_err());
        assert!(GenBRSpec::new(vec![-2; 5], vec![-3; 4], [3, 3, 3], -1, 6, 3).is_err());
        assert!(GenBRSpec::new(vec![-2; 5], vec![-3; 5], [3, 3, 3], -1, 3, 3).is_err());
    }

    #[test]
    fn h_vectors() {
        assert_eq!(h_vector_checks(&[1, 3, 2, -1]), HVectorReport { symmetric: false, sum: 5 });
        assert_eq!(h_vector_checks(&[1]), HVectorReport { symmetric: true, sum: 1 });
    }
}
