//! Arithmetically Gorenstein schemes as top parts of zero loci of sections of
//! Buchsbaum-Rim sheaves: random matrices, codimension checks, sections,
//! the end-to-end `br` pipeline, Pfaffian ideals and a verifier.
//!
//! Section degrees use the generator-degree grading of the source of the
//! matrix: a section of degree `d` of `φ: F -> G` is an element `s` of the
//! kernel with `deg(s_i) + col_twist_i = d` for every nonzero component.

use crate::betti::{BettiTable, GhostPair};
use crate::chern::{chern_coefficients, expected_resolution_general, TwistSpec};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::Ideal;
use crate::matrix::{FreeModuleElement, GradedMatrix};
use crate::poly::{Polynomial, Ring};
use crate::resolution::{GorensteinCertificate, Resolution};
use crate::rng::Rng;
use num_bigint::BigInt;

/// `br(t, r, entry_degree, section_degree)` on `P^n`: a random `t x (t+r)`
/// map `φ: F = (t+r) R(sd) -> G = t R(sd + ed)`, sections in `H^0(B_φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub t: usize,
    pub r: usize,
    pub entry_degree: u32,
    pub section_degree: i32,
    pub n: usize,
    pub characteristic: u64,
    pub seed: u64,
}

impl ConstructionSpec {
    pub fn new(t: usize, r: usize, entry_degree: u32, section_degree: i32, n: usize) -> Result<Self> {
        let s = ConstructionSpec {
            t,
            r,
            entry_degree,
            section_degree,
            n,
            characteristic: crate::field::DEFAULT_CHARACTERISTIC as u64,
            seed: 0,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn with_characteristic(mut self, p: u64) -> Result<Self> {
        PrimeField::new(p)?;
        self.characteristic = p;
        Ok(self)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.t < 1 || self.r < 1 {
            return Err(Error::InvalidSpec(format!("need t >= 1 and r >= 1, got t = {}, r = {}", self.t, self.r)));
        }
        if self.n < self.r {
            return Err(Error::InvalidSpec(format!("need n >= r, got n = {}, r = {}", self.n, self.r)));
        }
        if self.entry_degree < 1 {
            return Err(Error::InvalidSpec("entry degree must be at least 1".into()));
        }
        Ok(())
    }

    pub fn ring(&self) -> Result<Ring> {
        Ring::new(self.characteristic, self.n)
    }

    pub fn row_twists(&self) -> Vec<i32> {
        vec![-(self.section_degree + self.entry_degree as i32); self.t]
    }

    pub fn col_twists(&self) -> Vec<i32> {
        vec![-self.section_degree; self.t + self.r]
    }

    /// `F` and `G` as twist lists.
    pub fn twist_spec(&self) -> Result<TwistSpec> {
        let a = vec![self.section_degree as i64; self.t + self.r];
        let b = vec![(self.section_degree + self.entry_degree as i32) as i64; self.t];
        TwistSpec::new(a, b, self.n)
    }
}

#[derive(Clone, Debug)]
pub struct SectionResult {
    pub section: FreeModuleElement,
    /// Generated by the components of `section`.
    pub zero_ideal: Ideal,
    /// Degree of the section in the source grading.
    pub degree: i32,
    pub regular: bool,
    pub top: Option<Ideal>,
}

pub fn random_graded_matrix(spec: &ConstructionSpec, rng: &mut Rng) -> Result<GradedMatrix> {
    spec.validate()?;
    let ring = spec.ring()?;
    let entries = (0..spec.t)
        .map(|_| (0..spec.t + spec.r).map(|_| ring.random_form(spec.entry_degree, rng)).collect())
        .collect();
    GradedMatrix::new(ring, entries, spec.row_twists(), spec.col_twists())
}

/// Give a matrix with entries of one degree `e` the twists of
/// `(t+r) R(sd) -> t R(sd + e)`.
pub fn regrade(m: &GradedMatrix, section_degree: i32) -> Result<GradedMatrix> {
    let mut deg = None;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if let Some(d) = m.entry(i, j).degree() {
                if deg.is_some_and(|x| x != d) {
                    return Err(Error::InhomogeneousMatrix("entries of different degrees".into()));
                }
                deg = Some(d);
            }
        }
    }
    let e = deg.ok_or_else(|| Error::InvalidSpec("zero matrix".into()))? as i32;
    let entries = (0..m.rows()).map(|i| m.row(i)).collect();
    GradedMatrix::new(
        m.ring(),
        entries,
        vec![-(section_degree + e); m.rows()],
        vec![-section_degree; m.cols()],
    )
}

pub fn minors_ideal(m: &GradedMatrix, t: usize) -> Result<Ideal> {
    m.minors_ideal(t)
}

/// Do the `t x t` minors cut out codimension `r + 1`.
pub fn check_expected_codim(m: &GradedMatrix, t: usize, r: usize) -> bool {
    match m.minors_ideal(t) {
        Ok(i) => !i.is_zero() && i.codimension() == r as i64 + 1,
        Err(_) => false,
    }
}

/// Standard determinantal, and some generalized row deletion leaves a
/// matrix whose maximal minors have codimension `r + 2`. Row operations
/// `row_i += g_i row_k` before deleting row `k` are drawn at random, a few
/// times per `k`.
pub fn is_good_determinantal(m: &GradedMatrix, r: usize, rng: &mut Rng) -> bool {
    let t = m.rows();
    if !check_expected_codim(m, t, r) {
        return false;
    }
    if t == 1 {
        return true;
    }
    let ring = m.ring();
    let rt = m.row_twists();
    for k in 0..t {
        for _ in 0..3 {
            let mut rows = Vec::new();
            for i in (0..t).filter(|&i| i != k) {
                let shift = rt[k] - rt[i];
                let mut row = m.row(i);
                if shift >= 0 {
                    let g = ring.random_form(shift as u32, rng);
                    for (x, y) in row.iter_mut().zip(m.row(k)) {
                        *x = x.add_scaled(&g.mul_unchecked(&y), 1, None);
                    }
                }
                rows.push(row);
            }
            let keep: Vec<i32> = (0..t).filter(|&i| i != k).map(|i| rt[i]).collect();
            let Ok(sub) = GradedMatrix::new(ring, rows, keep, m.col_twists().to_vec()) else {
                continue;
            };
            if check_expected_codim(&sub, t - 1, r + 1) {
                return true;
            }
        }
    }
    false
}

/// `Σ f_l B_l` over the columns of `basis` with random forms `f_l` of degree
/// `d - col_twist_l`.
pub(crate) fn random_combination(basis: &GradedMatrix, d: i32, rng: &mut Rng) -> FreeModuleElement {
    let ring = basis.ring();
    let mut comps = vec![ring.zero(); basis.rows()];
    for l in 0..basis.cols() {
        let e = d - basis.col_twists()[l];
        if e < 0 {
            continue;
        }
        let f = ring.random_form(e as u32, rng);
        if f.is_zero() {
            continue;
        }
        for (i, c) in comps.iter_mut().enumerate() {
            let b = basis.entry(i, l);
            if !b.is_zero() {
                *c = c.add_scaled(&f.mul_unchecked(b), 1, None);
            }
        }
    }
    FreeModuleElement {
        components: comps,
        twists: basis.row_twists().to_vec(),
    }
}

/// Random section of degree `d` of the module generated by the columns of
/// `basis`, retried on a zero result. `r` is the expected codimension of
/// the zero locus.
pub(crate) fn section_of(basis: &GradedMatrix, d: i32, r: usize, rng: &mut Rng) -> Result<SectionResult> {
    let ring = basis.ring();
    for _ in 0..5 {
        let s = random_combination(basis, d, rng);
        if s.is_zero() {
            continue;
        }
        let zero_ideal = Ideal::new(ring, s.components.clone())?;
        let regular = zero_ideal.affine_dimension() == (ring.n() + 1 - r) as i64;
        return Ok(SectionResult {
            section: s,
            zero_ideal,
            degree: d,
            regular,
            top: None,
        });
    }
    Err(Error::ZeroSection(format!("no nonzero section of degree {d}")))
}

/// Random section of degree `d` of the kernel of `m`.
pub fn section(m: &GradedMatrix, d: i32, rng: &mut Rng) -> Result<SectionResult> {
    if m.cols() <= m.rows() {
        return Err(Error::Shape(format!("{}x{} map has no positive corank", m.rows(), m.cols())));
    }
    let b = m.syzygy();
    section_of(&b, d, m.cols() - m.rows(), rng)
}

/// Everything `br` did, with a `//` comment log.
#[derive(Clone, Debug)]
pub struct BrRun {
    pub matrix: GradedMatrix,
    pub minors_codimension: i64,
    pub section: SectionResult,
    pub top: Ideal,
    pub protocol: Vec<String>,
    /// The spec actually realized: shape of the matrix, and the section
    /// degree raised by the degree of the regular section that was used.
    pub spec: ConstructionSpec,
}

pub fn br(spec: &ConstructionSpec) -> Result<Ideal> {
    Ok(br_run(spec, None)?.top)
}

/// The pipeline: matrix (random, or `matrix` regraded to the spec's section
/// degree), codimension check of the maximal minors, section of `B_φ` in
/// degree 0 (raised by up to 2 when irregular), top part of codimension `r`.
pub fn br_run(spec: &ConstructionSpec, matrix: Option<&GradedMatrix>) -> Result<BrRun> {
    spec.validate()?;
    let mut rng = Rng::new(spec.seed);
    let mut log = vec![format!("// seed {}", spec.seed)];
    let m = match matrix {
        Some(m) => {
            log.push("// matrix read from input".into());
            regrade(m, spec.section_degree)?
        }
        None => {
            log.push(format!(
                "// random {} x {} matrix of forms of degree {}",
                spec.t,
                spec.t + spec.r,
                spec.entry_degree
            ));
            random_graded_matrix(spec, &mut rng)?
        }
    };
    let (t, r) = (m.rows(), m.cols() - m.rows());
    let minors = m.minors_ideal(t)?;
    let codim = minors.codimension();
    log.push(format!("// codimension of the maximal minors: {codim} (expected {})", r + 1));
    if codim != r as i64 + 1 {
        return Err(Error::Codimension {
            expected: r as i64 + 1,
            found: codim,
        });
    }
    let b = m.syzygy();
    log.push(format!("// kernel presented by {} generators", b.cols()));
    let expect = (spec.n + 1 - r) as i64;
    let mut found = None;
    for bump in 0..3 {
        let s = match section_of(&b, bump, r, &mut rng) {
            Ok(s) => s,
            Err(Error::ZeroSection(_)) => {
                log.push(format!("// no nonzero section of degree {bump}"));
                continue;
            }
            Err(e) => return Err(e),
        };
        let dim = s.zero_ideal.affine_dimension();
        log.push(format!("// section of degree {bump}: dim Z(s) = {dim} (regular iff {expect})"));
        if s.regular {
            found = Some(s);
            break;
        }
    }
    let mut s = found.ok_or_else(|| Error::IrregularSection(format!("no regular section up to degree 2 (r = {r})")))?;
    let top = s.zero_ideal.top_dimensional_part(r, &mut rng)?;
    log.push(format!(
        "// top part (J:(J:I)): {} generators, degree {}",
        top.generators().len(),
        top.degree()
    ));
    let effective = ConstructionSpec {
        t,
        r,
        entry_degree: (m.col_twists()[0] - m.row_twists()[0]) as u32,
        section_degree: spec.section_degree + s.degree,
        ..spec.clone()
    };
    s.top = Some(top.clone());
    Ok(BrRun {
        matrix: m,
        minors_codimension: codim,
        section: s,
        top,
        protocol: log,
        spec: effective,
    })
}

/// Maximal Pfaffians of an odd skew-symmetric matrix.
pub fn pfaffians(m: &GradedMatrix) -> Result<Ideal> {
    Ideal::new(m.ring(), m.maximal_pfaffians()?)
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub degree: i64,
    pub expected_degree: BigInt,
    pub degree_matches: bool,
    pub certificate: GorensteinCertificate,
    pub betti: BettiTable,
    pub expected_shape: BettiTable,
    pub shape_equal: bool,
    /// Pairs to cancel from the expected shape, when the computed table
    /// embeds.
    pub ghost_pairs: Option<Vec<GhostPair>>,
    pub regularity: i64,
}

impl ConstructionReport {
    pub fn passed(&self) -> bool {
        self.degree_matches && self.certificate.is_gorenstein && self.ghost_pairs.is_some()
    }
}

pub fn verify_construction(ix: &Ideal, spec: &TwistSpec) -> Result<ConstructionReport> {
    let res = Resolution::of_ideal(ix, true)?;
    let certificate = GorensteinCertificate::from_resolution(ix, &res);
    let betti = res.betti();
    let expected_shape = expected_resolution_general(spec);
    let expected_degree = chern_coefficients(spec).expected_degree;
    let degree = ix.degree();
    Ok(ConstructionReport {
        degree,
        degree_matches: BigInt::from(degree) == expected_degree,
        expected_degree,
        certificate,
        shape_equal: betti == expected_shape,
        ghost_pairs: expected_shape.ghost_pairs_over(&betti),
        regularity: res.regularity()?,
        betti,
        expected_shape,
    })
}

/// `1 x (r+1)` row of variables `z_0 .. z_r` with `F = (r+1) R(sd)`,
/// `G = R(sd + 1)`.
pub fn koszul_row(ring: Ring, r: usize, section_degree: i32) -> Result<GradedMatrix> {
    let row: Vec<Polynomial> = (0..=r).map(|i| ring.var(i)).collect();
    GradedMatrix::new(ring, vec![row], vec![-(section_degree + 1)], vec![-section_degree; r + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(ConstructionSpec::new(1, 5, 1, 2, 6).is_ok());
        assert!(ConstructionSpec::new(0, 5, 1, 2, 6).is_err());
        assert!(ConstructionSpec::new(1, 5, 1, 2, 4).is_err());
        assert!(ConstructionSpec::new(1, 3, 0, 2, 4).is_err());
        assert!(ConstructionSpec::new(1, 3, 1, 2, 4).unwrap().with_characteristic(24).is_err());
    }

    #[test]
    fn random_matrix_is_deterministic() {
        let spec = ConstructionSpec::new(1, 3, 2, 3, 6).unwrap();
        let a = random_graded_matrix(&spec, &mut Rng::new(3)).unwrap();
        let b = random_graded_matrix(&spec, &mut Rng::new(3)).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.rows(), a.cols()), (1, 4));
        assert!(a.row(0).iter().all(|f| f.degree() == Some(2)));
    }

    #[test]
    fn codim_checks() {
        let ring = Ring::new(32003, 3).unwrap();
        let z = GradedMatrix::zero(ring, vec![0], vec![1, 1]);
        assert!(!check_expected_codim(&z, 1, 1));
        let k = koszul_row(ring, 3, 2).unwrap();
        assert!(check_expected_codim(&k, 1, 3));
    }

    #[test]
    fn koszul_section_is_regular() {
        let ring = Ring::new(32003, 3).unwrap();
        let k = koszul_row(ring, 3, 2).unwrap();
        let s = section(&k, 0, &mut Rng::new(1)).unwrap();
        assert!(s.regular);
        assert_eq!(s.zero_ideal.generators().len(), 4);
        assert!(s.zero_ideal.generators().iter().all(|g| g.degree() == Some(2)));
        let again = section(&k, 0, &mut Rng::new(1)).unwrap();
        assert_eq!(again.section, s.section);
    }

    #[test]
    fn three_by_three_pfaffians_are_entries() {
        let ring = Ring::new(32003, 2).unwrap();
        let p = |s: &str| ring.parse(s).unwrap();
        let m = GradedMatrix::new(
            ring,
            vec![
                vec![p("0"), p("z0"), p("z1")],
                vec![p("-z0"), p("0"), p("z2")],
                vec![p("-z1"), p("-z2"), p("0")],
            ],
            vec![0, 0, 0],
            vec![1, 1, 1],
        )
        .unwrap();
        let i = pfaffians(&m).unwrap();
        assert!(i.equals(&Ideal::irrelevant(ring)).unwrap());
    }
}
