use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic index must be at least 1")]
    ZeroCyclotomicIndex,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor polynomial is not monic")]
    NonMonicDivisor,
    #[error("ring modulus must be monic of degree at least 1")]
    InvalidModulus,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("coordinate vector has length {found}, ring degree is {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error("image is not a root of the modulus: f(image) reduces to {residue}")]
    NotARoot { residue: String },
    #[error("exponent {exponent} is not coprime to {n}")]
    ExponentNotCoprime { exponent: u64, n: u64 },
    #[error("exponent must be positive")]
    ZeroExponent,
    #[error("ring is not cyclotomic; power endomorphisms need a cyclotomic index")]
    NotCyclotomic,
    #[error("sigma and tau coincide; a twisted pair needs two different endomorphisms")]
    IdenticalEndomorphisms,
    #[error("sum_powers index must be at least 1")]
    ZeroPowerIndex,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular (det = 0)")]
    SingularMatrix,
    #[error("exponents u and v must differ")]
    EqualExponents,
    #[error("invalid ring form: {0}")]
    InvalidForm(String),
    #[error("phi(n) = {phi} exceeds the size cap {cap}")]
    CapExceeded { phi: usize, cap: usize },
    #[error("phi(n) = {phi} leaves no pair of distinct endomorphisms")]
    DegenerateRing { phi: usize },
    #[error("n = {0} is not supported for table reproduction")]
    UnsupportedTable(u64),
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("{0} output is not available for this command")]
    UnsupportedFormat(&'static str),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("serialization failed: {0}")]
    Serialize(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}
