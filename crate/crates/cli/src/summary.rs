//! JSON summaries. Every subcommand emits one object tagged by `command`;
//! big integers are decimal strings, polynomials are in the input grammar.

use forge_core::betti::{BettiTable, GhostPair};
use forge_core::{GorensteinCertificate, HilbertReport, Ideal};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub characteristic: u32,
    pub n: usize,
    pub generators: Vec<String>,
    pub degree: i64,
    pub codimension: i64,
    pub affine_dimension: i64,
    pub h_vector: Vec<i64>,
}

impl IdealSummary {
    pub fn of(ideal: &Ideal) -> Self {
        let ring = ideal.ring();
        IdealSummary {
            characteristic: ring.characteristic(),
            n: ring.n(),
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
            degree: ideal.degree(),
            codimension: ideal.codimension(),
            affine_dimension: ideal.affine_dimension(),
            h_vector: ideal.h_vector(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub expected_degree: String,
    pub degree_matches: bool,
    pub certificate: GorensteinCertificate,
    pub betti: BettiTable,
    pub expected_shape: BettiTable,
    pub shape_equal: bool,
    pub ghost_pairs: Option<Vec<GhostPair>>,
    pub regularity: i64,
    pub arithmetic_genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernSummary {
    pub c: Vec<String>,
    pub c1: String,
    pub expected_degree: String,
    /// Closed formula for the degree when `r = 3`.
    pub degree_formula: Option<String>,
    pub expected_shape: BettiTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenBRSummary {
    pub e1: Vec<i64>,
    pub e2: Vec<i64>,
    pub ds: [i64; 3],
    pub l: i64,
    pub d: i64,
    pub n: usize,
    pub alpha: i64,
    pub b: i64,
    pub generator_degrees: [i64; 4],
    pub expected_shape: BettiTable,
    /// The shape is only established on P^3.
    pub verified_range: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Summary {
    Br {
        seed: u64,
        t: usize,
        r: usize,
        entry_degree: u32,
        /// Section degree of the realized sheaf, after escalation.
        section_degree: i32,
        minors_codimension: i64,
        section_shift: i32,
        zero_scheme: IdealSummary,
        top: IdealSummary,
        protocol: Vec<String>,
        verification: Option<Verification>,
    },
    Section {
        seed: u64,
        degree: i32,
        regular: bool,
        section: Vec<String>,
        zero_scheme: IdealSummary,
    },
    Top {
        seed: u64,
        codimension: usize,
        top: IdealSummary,
    },
    Hilb {
        report: HilbertReport,
    },
    Res {
        minimal: bool,
        betti: BettiTable,
        regularity: Option<i64>,
        certificate: Option<GorensteinCertificate>,
    },
    Minors {
        t: usize,
        expected_codimension: Option<i64>,
        ideal: IdealSummary,
    },
    Pfaffians {
        ideal: IdealSummary,
        certificate: GorensteinCertificate,
    },
    Predict {
        chern: Option<ChernSummary>,
        generalized: Option<GenBRSummary>,
    },
    Link {
        seed: u64,
        section_degree: i32,
        zero_scheme: IdealSummary,
        ix: IdealSummary,
        certificate: GorensteinCertificate,
        ix_betti: BettiTable,
        iw: IdealSummary,
    },
    Genbr {
        seed: u64,
        spec: GenBRSummary,
        ig_betti: BettiTable,
        ci: Vec<String>,
        iv: IdealSummary,
        iv_betti: BettiTable,
        zero_scheme: IdealSummary,
        betti: BettiTable,
        ghost_pairs: Option<Vec<GhostPair>>,
    },
}
