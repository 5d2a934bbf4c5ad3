//! Randomized checks shared by the property suite and the acceptance run.
//! Each check takes a seed plus small size parameters and fails with a
//! `TestCaseError` describing the counterexample.

use forge_core::chern::{chern_coefficients, degree_formula_r3, expected_resolution_general};
use forge_core::construct::{br_run, ConstructionSpec};
use forge_core::monomial::Monomial;
use forge_core::*;
use proptest::prelude::{any, prop, prop_oneof, Just, Strategy};
use proptest::test_runner::TestCaseError;
use std::collections::HashMap;

pub type TestResult = std::result::Result<(), TestCaseError>;

fn fail<T>(msg: String) -> std::result::Result<T, TestCaseError> {
    Err(TestCaseError::fail(msg))
}

/// Sparse homogeneous generators: each has 1 to 3 random monomials of a
/// random degree in `1..=max_deg`.
pub fn sparse_ideal(seed: u64, n: usize, gens: usize, max_deg: u32) -> Ideal {
    let ring = Ring::new(32003, n).unwrap();
    let mut rng = Rng::new(seed);
    let polys = (0..gens)
        .map(|_| {
            let d = 1 + rng.below(max_deg as u64) as u32;
            let all = Monomial::all_of_degree(ring.nvars(), d);
            let k = 1 + rng.below(3) as usize;
            let terms = (0..k)
                .map(|_| (all[rng.below(all.len() as u64) as usize], 1 + rng.below(32002) as u32))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(ring, polys).unwrap()
}

/// Full division of `f` by `basis`, written independently of the engine.
fn remainder(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some(&(m, c)) = p.terms().first() {
        match basis.iter().find(|g| g.leading_monomial().unwrap().divides(&m)) {
            Some(g) => {
                let q = m.div(g.leading_monomial().unwrap());
                let coef = field.mul(c, field.inv(g.leading_coefficient().unwrap()));
                p = p.sub(&g.mul_term(&q, coef)).unwrap();
            }
            None => {
                rem.push((m, c));
                p = Polynomial::from_terms(ring, p.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_terms(ring, rem)
}

pub fn s_pairs_vanish(seed: u64, n: usize, gens: usize) -> TestResult {
    let i = sparse_ideal(seed, n, gens, 3);
    let gb = i.groebner_basis().to_vec();
    for g in i.generators() {
        if !remainder(g, &gb).is_zero() {
            return fail(format!("generator {g:?} does not reduce to zero"));
        }
    }
    for a in 0..gb.len() {
        for b in a + 1..gb.len() {
            let (f, g) = (&gb[a], &gb[b]);
            let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
            let l = lf.lcm(lg);
            let s = f
                .mul_term(&l.div(lf), g.leading_coefficient().unwrap())
                .sub(&g.mul_term(&l.div(lg), f.leading_coefficient().unwrap()))
                .unwrap();
            let r = remainder(&s, &gb);
            if !r.is_zero() {
                return fail(format!("S({f:?}, {g:?}) leaves {r:?}"));
            }
        }
    }
    Ok(())
}

/// `dim_k I_k` as the rank of all products `m * g` of degree `k`.
fn ideal_dimension_in_degree(i: &Ideal, k: u32) -> usize {
    let ring = i.ring();
    let field = ring.field();
    let basis = Monomial::all_of_degree(ring.nvars(), k);
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(j, m)| (*m, j)).collect();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for g in i.generators() {
        let d = g.degree().unwrap();
        if d > k {
            continue;
        }
        for m in Monomial::all_of_degree(ring.nvars(), k - d) {
            let mut row = vec![0u32; basis.len()];
            for (t, c) in g.mul_term(&m, 1).terms() {
                row[index[t]] = *c;
            }
            rows.push(row);
        }
    }
    let mut rank = 0;
    for col in 0..basis.len() {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(rows[rank][col]);
        let pivot_row: Vec<u32> = rows[rank].iter().map(|&x| field.mul(x, inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(f, y));
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `sum(h) = degree`, and `h(t) / (1-t)^dim` reproduces the Hilbert
/// function obtained by linear algebra in degrees `0..=6`.
pub fn h_vector_matches_hilbert_function(seed: u64, n: usize, gens: usize) -> TestResult {
    let i = sparse_ideal(seed, n, gens, 3);
    let h = i.h_vector();
    let dim = i.affine_dimension();
    if h.iter().sum::<i64>() != i.degree() {
        return fail(format!("sum of {h:?} is not the degree {}", i.degree()));
    }
    if dim <= 0 {
        return Ok(());
    }
    for k in 0..=6u32 {
        let total = binomial(k as i64 + n as i64, n as i64);
        let hf = total - ideal_dimension_in_degree(&i, k) as i64;
        let series: i64 = h
            .iter()
            .enumerate()
            .map(|(j, &hj)| hj * binomial(k as i64 - j as i64 + dim - 1, dim - 1))
            .sum();
        if hf != series {
            return fail(format!("HF({k}) = {hf} but h = {h:?}, dim {dim} give {series}"));
        }
    }
    Ok(())
}

/// Union of two random lines and a random point in P^3, with an embedded
/// component at the irrelevant ideal. Saturation removes the embedded part,
/// the top part keeps the two lines, and both operations are idempotent.
pub fn saturation_and_top_idempotent(seed: u64, embedded_power: u32) -> TestResult {
    let ring = Ring::new(32003, 3).unwrap();
    let mut rng = Rng::new(seed);
    let mut linear = |k: usize| Ideal::new(ring, (0..k).map(|_| ring.random_form(1, &mut rng)).collect()).unwrap();
    let (a, b, c) = (linear(2), linear(2), linear(3));
    let m = Ideal::irrelevant(ring);
    let mp = (1..embedded_power).fold(m.clone(), |acc, _| acc.product(&m).unwrap());
    let lines = a.intersection(&b).unwrap();
    let reduced = lines.intersection(&c).unwrap();
    let i = reduced.intersection(&mp).unwrap();

    let sat = i.saturation().unwrap();
    if !sat.equals(&reduced).unwrap() {
        return fail("saturation did not remove the embedded component".into());
    }
    if !sat.saturation().unwrap().equals(&sat).unwrap() {
        return fail("saturation is not idempotent".into());
    }
    let top = i.top_dimensional_part(2, &mut rng).unwrap();
    if !top.equals(&lines).unwrap() {
        return fail("top part is not the union of the two lines".into());
    }
    if !top.top_dimensional_part(2, &mut rng).unwrap().equals(&top).unwrap() {
        return fail("top part is not idempotent".into());
    }
    if !i.is_subset(&top).unwrap() {
        return fail("I is not contained in its top part".into());
    }
    Ok(())
}

/// A resolution with an inserted ghost pair minimizes to the minimal one,
/// and every table along the way carries the Hilbert series of `R/I`.
pub fn minimization_preserves_hilbert_series(seed: u64, n: usize, gens: usize) -> TestResult {
    let i = sparse_ideal(seed, n, gens, 3);
    let numerator = i.hilbert_report().first_series.clone();
    let minimal = Resolution::of_ideal(&i, true).unwrap();
    let plain = Resolution::of_ideal(&i, false).unwrap();
    let mut rng = Rng::new(seed ^ 0x5eed);
    let noisy = if plain.len() >= 2 {
        let deg = *plain.maps()[1].col_twists().iter().max().unwrap() + rng.below(2) as i32;
        plain.with_ghost_pair(1, deg, &mut rng).unwrap()
    } else {
        plain
    };
    if !noisy.is_complex().unwrap() {
        return fail("perturbed resolution is not a complex".into());
    }
    let reduced = noisy.minimize();
    for (name, res) in [("minimal", &minimal), ("perturbed", &noisy), ("minimized", &reduced)] {
        if res.betti().hilbert_numerator() != numerator {
            return fail(format!("{name} table {} has the wrong Hilbert series", res.betti()));
        }
    }
    if reduced.has_units() || reduced.betti() != minimal.betti() {
        return fail(format!("minimized {} differs from minimal {}", reduced.betti(), minimal.betti()));
    }
    Ok(())
}

/// Small `q = 1` specs `(t, entry degree, section degree, seed)` on P^3
/// with `r = 3`, restricted to shapes with a regular section within the
/// escalation window of `br_run`.
pub fn small_spec() -> impl Strategy<Value = (usize, u32, i32, u64)> {
    prop_oneof![
        (1usize..=2, Just(1u32), 0i32..=2, any::<u64>()),
        (Just(1usize), Just(2u32), Just(1i32), any::<u64>()),
    ]
}

fn run_small(t: usize, ed: u32, sd: i32, seed: u64) -> forge_core::Result<construct::BrRun> {
    let spec = ConstructionSpec::new(t, 3, ed, sd, 3)?.with_seed(seed);
    br_run(&spec, None)
}

/// Every successful construction has a minimal Betti table that embeds into
/// the predicted shape up to ghost pairs, and the degree predicted by `c_3`.
pub fn construction_embeds_into_prediction(t: usize, ed: u32, sd: i32, seed: u64) -> TestResult {
    let run = match run_small(t, ed, sd, seed) {
        Ok(run) => run,
        Err(e) => return fail(format!("t={t} ed={ed} sd={sd} seed={seed}: {e}")),
    };
    let res = Resolution::of_ideal(&run.top, true).unwrap();
    let predicted = expected_resolution_general(&run.spec.twist_spec().unwrap());
    if !predicted.embeds(&res.betti()) {
        return fail(format!("{} does not embed into {predicted}", res.betti()));
    }
    let c = chern_coefficients(&run.spec.twist_spec().unwrap());
    if c.expected_degree != run.top.degree().into() {
        return fail(format!("degree {} but c_3 = {}", run.top.degree(), c.expected_degree));
    }
    Ok(())
}

pub fn deterministic_per_seed(t: usize, ed: u32, sd: i32, seed: u64) -> TestResult {
    let a = run_small(t, ed, sd, seed);
    let b = run_small(t, ed, sd, seed);
    match (a, b) {
        (Ok(a), Ok(b)) => {
            if a.matrix != b.matrix || a.protocol != b.protocol || a.top.generators() != b.top.generators() {
                return fail(format!("seed {seed} gave two different runs"));
            }
        }
        (Err(a), Err(b)) => {
            if a.to_string() != b.to_string() {
                return fail(format!("seed {seed} failed differently: {a} / {b}"));
            }
        }
        _ => return fail(format!("seed {seed} succeeded only once")),
    }
    Ok(())
}

/// `r = 3`, `t` in `1..=4`, twists in `[1, 9]`. Only the symbolic formulas
/// are compared, so `a_i > b_j` is not required.
pub fn r3_twists() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (1usize..=4).prop_flat_map(|t| (prop::collection::vec(1i64..=9, t + 3), prop::collection::vec(1i64..=9, t)))
}

pub fn degree_formula_matches_chern(a: &[i64], b: &[i64]) -> TestResult {
    let spec = TwistSpec::new(a.to_vec(), b.to_vec(), 6).unwrap();
    let c = chern_coefficients(&spec);
    let f = degree_formula_r3(a, b).unwrap();
    if c.c[3] != f {
        return fail(format!("a={a:?} b={b:?}: formula {f}, c3 {}", c.c[3]));
    }
    Ok(())
}
