//! Gorenstein liaison through sections of Buchsbaum-Rim sheaves that
//! vanish on a given scheme, and sections of generalized Buchsbaum-Rim
//! sheaves attached to complete-intersection links of Gorenstein schemes.

use crate::betti::{BettiTable, GhostPair};
use crate::chern::{expected_resolution_theorem5, GenBRSpec};
use crate::construct::{section_of, SectionResult};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::matrix::GradedMatrix;
use crate::resolution::{GorensteinCertificate, Resolution};
use crate::rng::Rng;

/// `I_V ⊗ Id`: the columns `g e_i` for every generator `g` of `I_V` and
/// every basis vector `e_i` of the module with the given twists.
pub fn ideal_tensor_identity(iv: &Ideal, twists: &[i32]) -> GradedMatrix {
    let ring = iv.ring();
    let mut cols = Vec::new();
    let mut ct = Vec::new();
    for (i, &t) in twists.iter().enumerate() {
        for g in iv.generators() {
            let mut c = vec![ring.zero(); twists.len()];
            c[i] = g.clone();
            cols.push(c);
            ct.push(t + g.degree().unwrap() as i32);
        }
    }
    let entries = (0..twists.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    GradedMatrix::new(ring, entries, twists.to_vec(), ct).expect("graded by construction")
}

/// A section of `B_φ(j)` inside `F ⊗ I_V`, with its zero locus.
#[derive(Clone, Debug)]
pub struct CommonSection {
    /// `syz(φ) ∩ (I_V ⊗ Id)`.
    pub module: GradedMatrix,
    pub section: SectionResult,
    /// Saturation of the ideal of the entries of the section.
    pub zero_scheme: Ideal,
}

/// Random combination of the columns of `syz(φ) ∩ (I_V ⊗ Id)` of degree
/// `degree`, or of the first degree (from the lowest column degree, up to
/// three tries) where it is regular when `degree` is `None`.
pub fn common_section(phi: &GradedMatrix, iv: &Ideal, degree: Option<i32>, rng: &mut Rng) -> Result<CommonSection> {
    if phi.cols() <= phi.rows() {
        return Err(Error::Shape(format!("{}x{} map has no positive corank", phi.rows(), phi.cols())));
    }
    let r = phi.cols() - phi.rows();
    let b = phi.syzygy();
    let module = if iv.is_unit() {
        b
    } else {
        b.module_intersection(&ideal_tensor_identity(iv, phi.col_twists()))?
    };
    if module.cols() == 0 {
        return Err(Error::ZeroSection("the intersection module is zero".into()));
    }
    let degrees: Vec<i32> = match degree {
        Some(d) => vec![d],
        None => {
            let lo = *module.col_twists().iter().min().unwrap();
            (lo..lo + 3).collect()
        }
    };
    let mut last = None;
    for d in degrees {
        let s = match section_of(&module, d, r, rng) {
            Ok(s) => s,
            Err(e) => {
                last = Some(e);
                continue;
            }
        };
        if s.regular {
            let zero_scheme = s.zero_ideal.saturation()?;
            if !iv.is_unit() && !zero_scheme.is_subset(iv)? {
                return Err(Error::Certificate("Z(s) does not contain V".into()));
            }
            return Ok(CommonSection {
                module,
                section: s,
                zero_scheme,
            });
        }
        last = Some(Error::IrregularSection(format!("section of degree {d} is not regular")));
    }
    Err(last.unwrap())
}

/// A direct G-link `V ~ W` through the arithmetically Gorenstein `X`.
#[derive(Clone, Debug)]
pub struct LinkRecord {
    pub iv: Ideal,
    pub phi: GradedMatrix,
    pub degree: i32,
    pub section: CommonSection,
    pub ix: Ideal,
    pub certificate: GorensteinCertificate,
    pub ix_betti: BettiTable,
    /// `I_X : I_V`.
    pub iw: Ideal,
}

pub fn gorenstein_link(phi: &GradedMatrix, iv: &Ideal, degree: Option<i32>, rng: &mut Rng) -> Result<LinkRecord> {
    let c = phi.cols() - phi.rows().min(phi.cols());
    let cv = iv.codimension();
    if cv != c as i64 {
        return Err(Error::Codimension {
            expected: c as i64,
            found: cv,
        });
    }
    let section = common_section(phi, iv, degree, rng)?;
    let ix = section.section.zero_ideal.top_dimensional_part(c, rng)?;
    if !ix.is_subset(iv)? {
        return Err(Error::Certificate("V is not contained in X".into()));
    }
    let res = Resolution::of_ideal(&ix, true)?;
    let certificate = GorensteinCertificate::from_resolution(&ix, &res);
    let iw = ix.quotient(iv)?;
    Ok(LinkRecord {
        iv: iv.clone(),
        phi: phi.clone(),
        degree: section.section.degree,
        section,
        ix,
        certificate,
        ix_betti: res.betti(),
        iw,
    })
}

/// A section of a generalized Buchsbaum-Rim sheaf and the check of its
/// resolution against the predicted shape.
#[derive(Clone, Debug)]
pub struct GenBRRun {
    pub spec: GenBRSpec,
    pub ig: Ideal,
    pub ig_betti: BettiTable,
    pub ci: Ideal,
    pub iv: Ideal,
    pub iv_betti: BettiTable,
    /// `1 x 4` row of minimal generators of `I_V`.
    pub phi: GradedMatrix,
    pub section: SectionResult,
    pub zero_scheme: Ideal,
    pub betti: BettiTable,
    pub expected_shape: BettiTable,
    pub ghost_pairs: Option<Vec<GhostPair>>,
    /// The resolution shape is only established on `P^3`.
    pub verified_range: bool,
}

impl GenBRRun {
    pub fn passed(&self) -> bool {
        self.ghost_pairs.is_some() && self.zero_scheme.minimal_generators().generators().len() == 4
    }
}

/// Complete intersection of type `ds` inside `ig` from random elements,
/// retried until it has codimension 3.
fn complete_intersection_inside(ig: &Ideal, ds: [i64; 3], rng: &mut Rng) -> Result<Ideal> {
    for _ in 0..10 {
        let forms = ds.iter().map(|&d| ig.random_element(d as u32, rng)).collect();
        let ci = Ideal::new(ig.ring(), forms)?;
        if ci.generators().len() == 3 && ci.codimension() == 3 {
            return Ok(ci);
        }
    }
    Err(Error::NoCompleteIntersection(ds.iter().map(|&d| d as u32).collect()))
}

/// Link the Gorenstein `I_G` by a complete intersection of type `ds`, take
/// the residual `I_V`, and a section of the kernel of its generator row in
/// degree `d`. The twists `E_1`, `E_2` and `l` are read off the minimal
/// resolution of `I_G`; a given `l` must agree.
pub fn generalized_br_run(ig: &Ideal, ds: [i64; 3], l: Option<i64>, d: i64, rng: &mut Rng) -> Result<GenBRRun> {
    let ring = ig.ring();
    let n = ring.n();
    let res_g = Resolution::of_ideal(ig, true)?;
    let cert = GorensteinCertificate::from_resolution(ig, &res_g);
    if cert.codimension != 3 {
        return Err(Error::Codimension {
            expected: 3,
            found: cert.codimension,
        });
    }
    if !cert.is_gorenstein {
        return Err(Error::Certificate("I_G is not arithmetically Gorenstein".into()));
    }
    let ig_betti = res_g.betti();
    let e1: Vec<i64> = ig_betti.entries().iter().filter(|e| e.0 == 0).flat_map(|&(_, d, c)| vec![-(d as i64); c]).collect();
    let e2: Vec<i64> = ig_betti.entries().iter().filter(|e| e.0 == 1).flat_map(|&(_, d, c)| vec![-(d as i64); c]).collect();
    let last = *ig_betti.step(2).keys().next().unwrap() as i64;
    let l_found = n as i64 + 1 - last;
    if let Some(l) = l {
        if l != l_found {
            return Err(Error::InvalidSpec(format!("I_G has l = {l_found}, not {l}")));
        }
    }
    let spec = GenBRSpec::new(e1, e2, ds, l_found, d, n)?;

    let ci = complete_intersection_inside(ig, ds, rng)?;
    let iv = ci.quotient(ig)?;
    let iv_res = Resolution::of_ideal(&iv, true)?;
    let phi = iv_res.maps()[0].clone();
    if phi.cols() != 4 {
        return Err(Error::Certificate(format!(
            "I_V has {} minimal generators, not 4",
            phi.cols()
        )));
    }
    let b = phi.syzygy();
    let mut section = None;
    for _ in 0..3 {
        let s = section_of(&b, d as i32, 3, rng)?;
        if s.regular {
            section = Some(s);
            break;
        }
    }
    let section = section.ok_or_else(|| Error::IrregularSection(format!("no regular section in degree {d}")))?;
    let zero_scheme = section.zero_ideal.saturation()?;
    let betti = Resolution::of_ideal(&zero_scheme, true)?.betti();
    let expected_shape = expected_resolution_theorem5(&spec);
    Ok(GenBRRun {
        verified_range: spec.is_verified_range(),
        ghost_pairs: expected_shape.ghost_pairs_over(&betti),
        spec,
        ig: ig.clone(),
        ig_betti,
        ci,
        iv,
        iv_betti: iv_res.betti(),
        phi,
        section,
        zero_scheme,
        betti,
        expected_shape,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn tensor_with_identity_shape() {
        let r = Ring::new(32003, 2).unwrap();
        let i = Ideal::parse(r, &["z0", "z1^2"]).unwrap();
        let m = ideal_tensor_identity(&i, &[-2, -2, -2]);
        assert_eq!((m.rows(), m.cols()), (3, 6));
        assert_eq!(m.col_twists(), &[-1, 0, -1, 0, -1, 0]);
    }

    #[test]
    fn unit_ideal_reduces_to_plain_section() {
        let r = Ring::new(32003, 3).unwrap();
        let phi = crate::construct::koszul_row(r, 3, 2).unwrap();
        let cs = common_section(&phi, &Ideal::unit(r), Some(0), &mut Rng::new(4)).unwrap();
        let plain = crate::construct::section(&phi, 0, &mut Rng::new(4)).unwrap();
        assert_eq!(cs.section.section, plain.section);
    }
}
