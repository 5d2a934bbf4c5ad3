//! Hilbert series of monomial ideals and the reports built on them.

use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};

/// Numerator `Q(t)` of the Hilbert series `Q(t)/(1-t)^N` of `k[z]/M` for the
/// monomial ideal `M`, by the pivot recursion
/// `Q(M) = Q(M + p) + t^deg(p) Q(M : p)`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut q = numerator(minimalize(gens.to_vec()));
    trim(&mut q);
    q
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn trim(q: &mut Vec<i64>) {
    while q.len() > 1 && *q.last().unwrap() == 0 {
        q.pop();
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // Pick the variable shared by the most generators.
    let nvars = gens[0].nvars();
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let c = gens.iter().filter(|g| g.exponent(v) > 0).count();
        if c > best.1 {
            best = (v, c);
        }
    }
    if best.1 <= 1 {
        // Pairwise coprime: product of (1 - t^deg).
        let mut q = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            q = poly_mul(&q, &f);
        }
        return q;
    }
    let v = best.0;
    let e = gens
        .iter()
        .map(|g| g.exponent(v))
        .filter(|&x| x > 0)
        .min()
        .unwrap();
    let mut exps = vec![0u16; nvars];
    exps[v] = e;
    let p = Monomial::from_exponents(&exps).expect("valid variable count");

    let mut plus = gens.clone();
    plus.push(p);
    let a = numerator(minimalize(plus));
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&p))).collect();
    let b = numerator(minimalize(colon));

    let shift = e as usize;
    let mut out = vec![0i64; a.len().max(b.len() + shift)];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i + shift] += x;
    }
    out
}

/// Multiplicity of `t = 1` as a root of `q`, and the quotient by `(1-t)^k`
/// for that multiplicity. The zero polynomial gives `None`.
fn divide_out_one_minus_t(q: &[i64]) -> Option<(usize, Vec<i64>)> {
    if q.iter().all(|&x| x == 0) {
        return None;
    }
    let mut cur = q.to_vec();
    let mut k = 0;
    loop {
        if cur.iter().sum::<i64>() != 0 {
            trim(&mut cur);
            return Some((k, cur));
        }
        cur = divide_one_minus_t(&cur).expect("t=1 is a root");
        k += 1;
    }
}

/// Exact division by `(1 - t)`; `None` if it does not divide.
pub fn divide_one_minus_t(q: &[i64]) -> Option<Vec<i64>> {
    if q.len() < 2 {
        return if q.iter().all(|&x| x == 0) { Some(vec![0]) } else { None };
    }
    // q = (1 - t) h  =>  h_k = q_k + h_{k-1}
    let mut h = Vec::with_capacity(q.len() - 1);
    let mut acc = 0i64;
    for &c in &q[..q.len() - 1] {
        acc += c;
        h.push(acc);
    }
    if acc + q[q.len() - 1] != 0 {
        return None;
    }
    Some(h)
}

/// Hilbert series data of `R/I` in the layout of the classical session
/// printout: both numerators, the affine dimension of the cone, the
/// codimension `n + 1 - dim` and the degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub first_series: Vec<i64>,
    pub second_series: Vec<i64>,
    pub affine_dimension: i64,
    pub projective_codimension: i64,
    pub degree: i64,
}

impl HilbertReport {
    /// Build from the leading monomials of a Gröbner basis.
    pub fn from_leading_monomials(nvars: usize, lms: &[Monomial]) -> Self {
        let first = hilbert_numerator(lms);
        match divide_out_one_minus_t(&first) {
            None => HilbertReport {
                first_series: vec![0],
                second_series: vec![0],
                affine_dimension: -1,
                projective_codimension: nvars as i64 + 1,
                degree: 0,
            },
            Some((k, h)) => {
                let dim = nvars as i64 - k as i64;
                HilbertReport {
                    degree: h.iter().sum(),
                    first_series: first,
                    second_series: h,
                    affine_dimension: dim,
                    projective_codimension: nvars as i64 - dim,
                }
            }
        }
    }

    pub fn h_vector(&self) -> &[i64] {
        &self.second_series
    }

    /// Value of the Hilbert polynomial at `m`:
    /// `sum_k h_k binom(m - k + D, D)` with `D = dim - 1`.
    pub fn hilbert_polynomial_at(&self, m: i64) -> i64 {
        if self.affine_dimension <= 0 {
            return 0;
        }
        let d = (self.affine_dimension - 1) as u32;
        self.second_series
            .iter()
            .enumerate()
            .map(|(k, &h)| h * binomial_poly(m - k as i64 + d as i64, d))
            .sum()
    }

    /// `(-1)^D (P(0) - 1)` with `D` the projective dimension.
    pub fn arithmetic_genus(&self) -> i64 {
        let d = self.affine_dimension - 1;
        let v = self.hilbert_polynomial_at(0) - 1;
        if d % 2 == 0 {
            v
        } else {
            -v
        }
    }

    /// Dimension of `(R/I)_k`, from the first series.
    pub fn hilbert_function(&self, nvars: usize, k: usize) -> i64 {
        // coefficient of t^k in Q(t) / (1-t)^nvars
        (0..=k.min(self.first_series.len().saturating_sub(1)))
            .map(|i| self.first_series[i] * binomial_poly((k - i + nvars - 1) as i64, (nvars - 1) as u32))
            .sum()
    }

    pub fn is_symmetric(&self) -> bool {
        h_vector_is_symmetric(&self.second_series)
    }
}

/// `x (x-1) ... (x-d+1) / d!` for any integer `x`.
pub fn binomial_poly(x: i64, d: u32) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..d as i64 {
        num *= (x - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}

pub fn h_vector_is_symmetric(h: &[i64]) -> bool {
    h.iter().eq(h.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn principal_and_complete_intersection() {
        assert_eq!(hilbert_numerator(&[m(&[2, 0, 0])]), vec![1, 0, -1]);
        assert_eq!(hilbert_numerator(&[m(&[1, 0]), m(&[0, 1])]), vec![1, -2, 1]);
        assert_eq!(hilbert_numerator(&[]), vec![1]);
    }

    #[test]
    fn shared_variable_matches_inclusion_exclusion() {
        // M = (xy, xz): Q = 1 - 2t^2 + t^3
        let q = hilbert_numerator(&[m(&[1, 1, 0]), m(&[1, 0, 1])]);
        assert_eq!(q, vec![1, 0, -2, 1]);
    }

    #[test]
    fn report_for_point_ideal_and_unit() {
        let r = HilbertReport::from_leading_monomials(4, &[m(&[1, 0, 0, 0])]);
        assert_eq!(r.second_series, vec![1]);
        assert_eq!(r.degree, 1);
        assert_eq!(r.affine_dimension, 3);
        assert_eq!(r.projective_codimension, 1);
        let u = HilbertReport::from_leading_monomials(4, &[m(&[0, 0, 0, 0])]);
        assert_eq!(u.affine_dimension, -1);
    }

    #[test]
    fn genus_of_a_plane_cubic() {
        let r = HilbertReport::from_leading_monomials(3, &[m(&[3, 0, 0])]);
        assert_eq!(r.second_series, vec![1, 1, 1]);
        assert_eq!(r.arithmetic_genus(), 1);
        assert_eq!(r.hilbert_function(3, 5), 15);
    }

    #[test]
    fn division_by_one_minus_t() {
        assert_eq!(divide_one_minus_t(&[1, -1]), Some(vec![1]));
        assert_eq!(divide_one_minus_t(&[1, 0, -1]), Some(vec![1, 1]));
        assert_eq!(divide_one_minus_t(&[1, 1]), None);
    }
}
