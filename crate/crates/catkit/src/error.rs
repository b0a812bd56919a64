use thiserror::Error;

use crate::check::CheckReport;

/// Failure modes of engine operations.
///
/// `Structural` covers ill-formed input data (dangling identifiers, shape
/// mismatches) where a value cannot even be assembled.  `Law` means the data
/// assembled fine but an equational check failed; the report carries the
/// witnesses.  `Resource` is the size guard.  `Precondition` is a domain
/// error: the operation was applied to a value outside its stated domain
/// (for example a Hopf construction on a non-invertible operator).
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("law violation in {}: {} check(s) failed, first: {}",
        .0.subject, .0.violations.len(), .0.first_line())]
    Law(Box<CheckReport>),

    #[error("resource limit exceeded: {candidate} would have {requested} morphisms, limit is {limit}")]
    Resource {
        candidate: String,
        requested: usize,
        limit: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal invariant broke.  Reaching this is an engine bug, never a
    /// statement about the input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size guard for every operation that materialises a new category.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_morphisms: usize,
}

pub const DEFAULT_MAX_MORPHISMS: usize = 4000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_morphisms: DEFAULT_MAX_MORPHISMS,
        }
    }
}

impl Limits {
    pub fn check(&self, candidate: &str, requested: usize) -> Result<()> {
        if requested > self.max_morphisms {
            Err(Error::Resource {
                candidate: candidate.to_string(),
                requested,
                limit: self.max_morphisms,
            })
        } else {
            Ok(())
        }
    }
}
