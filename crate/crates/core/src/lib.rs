//! Exact graded commutative algebra over prime fields: polynomials, Gröbner
//! bases, free resolutions, Chern-class predictions, and the construction of
//! arithmetically Gorenstein schemes from sections of Buchsbaum-Rim sheaves.

pub mod betti;
pub mod chern;
pub mod construct;
pub mod error;
pub mod field;
pub mod groebner;
pub mod io;
pub mod liaison;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod rng;

pub use betti::{BettiTable, GhostPair};
pub use chern::{ChernReport, GenBRSpec, TwistSpec};
pub use error::{Error, Result};
pub use field::{PrimeField, DEFAULT_CHARACTERISTIC};
pub use groebner::{HilbertReport, Ideal};
pub use matrix::{FreeModuleElement, GradedMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Homogeneity, Polynomial, Ring};
pub use resolution::{gorenstein_certificate, GorensteinCertificate, Resolution};
pub use rng::Rng;
