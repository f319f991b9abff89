use thiserror::Error;

use crate::check::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("scalars from different fields: {0} and {1}")]
    FieldMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: String, found: String },

    /// A map that has to be bijective is not.
    #[error("{map} not invertible")]
    Singular { map: String },

    #[error("missing component `{name}`")]
    MissingComponent { name: String },

    #[error("{map} is not a morphism: {reason}")]
    NotAMorphism { map: String, reason: String },

    #[error("maps {first} and {second} do not commute")]
    NonCommutingMaps { first: String, second: String },

    /// A hypothesis of a construction failed; the report carries the witnesses.
    #[error("hypothesis failed: {hypothesis}")]
    HypothesisFailed {
        hypothesis: String,
        report: Option<Box<CheckReport>>,
    },

    /// Verify mode re-checked a construction's conclusion and it did not hold.
    #[error("conclusion of {theorem} failed to verify")]
    ConclusionFailed { theorem: String, report: Box<CheckReport> },

    #[error("r is not invariant under {map}")]
    InvarianceFailed { map: String },

    #[error("A(r) is not central for the tensor-cube actions")]
    CentralityFailed { report: Box<CheckReport> },

    #[error("r does not satisfy the associative BiHom-Yang-Baxter equation")]
    AybeFailed { report: Box<CheckReport> },

    #[error("search space has {candidates} candidates, limit is {limit}")]
    SpaceTooLarge { candidates: String, limit: u64 },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dims(expected: impl ToString, found: impl ToString) -> Self {
        Error::DimMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn missing(name: &str) -> Self {
        Error::MissingComponent { name: name.to_string() }
    }

    pub(crate) fn hypothesis(hypothesis: impl Into<String>, report: CheckReport) -> Self {
        Error::HypothesisFailed {
            hypothesis: hypothesis.into(),
            report: Some(Box::new(report)),
        }
    }
}
