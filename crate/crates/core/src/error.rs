use thiserror::Error;

/// Errors raised by the library. Every variant maps to a stable
/// machine-readable code through [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("substitution error: {0}")]
    Substitution(String),

    #[error("not a power series: {0}")]
    NotAPowerSeries(String),

    #[error("size guard `{guard}` exceeded: {actual} > {limit}")]
    SizeGuard {
        guard: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate sequence: {0}")]
    Degenerate(String),

    #[error("inconsistent recurrence: {0}")]
    Inconsistent(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("recurrence is not reversible: {0}")]
    NotReversible(String),

    #[error("matching has zero weight: {0}")]
    ZeroWeight(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension",
            Error::Substitution(_) => "substitution",
            Error::NotAPowerSeries(_) => "not_a_power_series",
            Error::SizeGuard { .. } => "size_guard",
            Error::Shape(_) => "shape",
            Error::Precondition(_) => "precondition",
            Error::Domain(_) => "domain",
            Error::Degenerate(_) => "degenerate",
            Error::Inconsistent(_) => "inconsistent",
            Error::InsufficientData(_) => "insufficient_data",
            Error::NotReversible(_) => "not_reversible",
            Error::ZeroWeight(_) => "zero_weight",
            Error::Parse(_) => "parse",
        }
    }

    /// Name of the guard that fired, if this is a size-guard error.
    pub fn guard(&self) -> Option<&'static str> {
        match self {
            Error::SizeGuard { guard, .. } => Some(guard),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
