use crate::field::{FieldError, FieldSpec};
use crate::mpoly::MultiDegree;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid graded structure: {0}")]
    InvalidStructure(String),
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
    #[error("polynomial {index} is not multihomogeneous of degree {expected}")]
    DegreeMismatch { index: usize, expected: MultiDegree },
    #[error("inadmissible Sylvester index: block {block} has |alpha| = {norm}, needs < {min_degree}")]
    InadmissibleIndex { block: usize, norm: u32, min_degree: i64 },
    #[error("nu = {nu} is not hybrid-admissible: {reason}")]
    NotHybridAdmissible { nu: MultiDegree, reason: String },
    #[error("negative multidegree {0}")]
    NegativeDegree(MultiDegree),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("{rows}x{cols} matrix exceeds the dense limit {limit} (override with MULTIELIM_MAX_DENSE)")]
    TooLarge { rows: usize, cols: usize, limit: usize },
    #[error("not verified zero-dimensional: corank {corank} at {nu} but {next_corank} at {next_nu}")]
    NotZeroDimensional { nu: MultiDegree, corank: usize, next_nu: MultiDegree, next_corank: usize },
    #[error("saturation at {mu} did not stabilize up to exponent {exponent}")]
    Unstable { mu: MultiDegree, exponent: u32 },
    #[error("no nonzero form of degree {0} vanishes at all given points")]
    NoVanishingForm(MultiDegree),
    #[error("operation requires {required}, got {found}")]
    UnsupportedField { required: &'static str, found: FieldSpec },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
