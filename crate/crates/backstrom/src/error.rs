//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Shape or ambient-dimension mismatch in a linear-algebra call.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Malformed input file or builtin name.
    #[error("parse error: {0}")]
    Parse(String),

    /// A declared invariant of an input object does not hold. Carries the
    /// first violated axiom with witnesses.
    #[error("validation error: {0}")]
    Validation(String),

    /// The given rings do not form a Backström pair.
    #[error("not a Backström pair: {0}")]
    NotBackstrom(String),

    /// Two objects that must live over the same algebra (or on the same
    /// side) do not.
    #[error("algebra mismatch: {0}")]
    Mismatch(String),

    /// A cross-check between two independent computations disagreed. This
    /// means either invalid input slipped past validation or a bug; it is
    /// never a user error.
    #[error("internal cross-check failed: {0}")]
    Internal(String),

    /// A computation was truncated by its cutoff before it could decide.
    #[error("undecidable at cutoff: {0}")]
    Undecidable(String),
}
