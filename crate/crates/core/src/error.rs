use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{k} is not a unit modulo {n}")]
    NotAUnit { k: u64, n: u64 },

    #[error("invalid group parameters (m={m}, n={n}, k={k}): {reason}")]
    InvalidParams {
        m: u64,
        n: u64,
        k: u64,
        reason: String,
    },

    #[error("Riemann-Hurwitz equation has no integral genus ({detail})")]
    NonIntegralGenus { detail: String },

    #[error("data set failed validation: {0}")]
    Invalid(String),

    #[error("congruence for the rotation datum of triple {triple} has no unit solution")]
    DivisionObstruction { triple: usize },

    #[error("fixed-point count for ({u},{order}) gives non-integral multiplicity")]
    NonIntegralMultiplicity { u: u64, order: u64 },

    #[error("data sets have different shapes: {0}")]
    ShapeMismatch(String),

    #[error("constructed witness data set is invalid: {0}")]
    WitnessInvalid(String),

    #[error("search budget of {budget} relation checks exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("not an irreducible Type 1 data set: {0}")]
    NotType1(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAUnit { .. } => "not-a-unit",
            Error::InvalidParams { .. } => "invalid-params",
            Error::NonIntegralGenus { .. } => "non-integral-genus",
            Error::Invalid(_) => "invalid",
            Error::DivisionObstruction { .. } => "division-obstruction",
            Error::NonIntegralMultiplicity { .. } => "non-integral-multiplicity",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::WitnessInvalid(_) => "witness-invalid",
            Error::SearchBudgetExceeded { .. } => "search-budget-exceeded",
            Error::NotType1(_) => "not-type-1",
            Error::Precondition(_) => "precondition",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
