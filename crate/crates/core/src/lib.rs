//! Twisted `(sigma, tau)`-derivations of monogenic rings `Z[X]/(f)`, with a
//! focus on cyclotomic integers `Z[zeta_n]`.
//!
//! The crate builds derivations from the image of the generator, checks the
//! twisted product rule exactly, decides innerness through the multiplier
//! matrix of `tau - sigma`, and sweeps all endomorphism pairs of a cyclotomic
//! ring to compare determinants with closed-form predictions.
//!
//! All arithmetic is over arbitrary-precision integers.

pub mod cli;
pub mod endo;
pub mod error;
pub mod harness;
pub mod innerness;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod ring;
pub mod serial;

pub use endo::{Endomorphism, LeibnizVerdict, TwistedDerivation, TwistedPair};
pub use error::{Error, Result};
pub use innerness::{
    classify, predict_det, valuate, Classification, Kind, MultiplierMatrix, RingForm, Valuation,
};
pub use linalg::{
    adjugate, det, mat_vec, solve_unique, IntMatrix, IntVector, RatMatrix, RatVector,
};
pub use poly::{cyclotomic_poly, poly_divmod, Polynomial};
pub use ring::{QuotientRing, RingElement};

/// Version string recorded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
