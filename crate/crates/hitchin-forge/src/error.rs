//! Error type shared by every module.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in an exact computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two field elements (or matrices) live over different multiquadratic fields.
    #[error("field descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(String, String),
    /// A radicand is not a square-free integer greater than one, or the list is malformed.
    #[error("invalid radicand: {0}")]
    InvalidRadicand(String),
    /// Matrix or vector shapes are incompatible.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// Inversion of a singular matrix or a zero element.
    #[error("singular matrix")]
    Singular,
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// Quaternions from different algebras were combined.
    #[error("quaternion algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    /// A quadratic form has vanishing determinant where a nondegenerate one is required.
    #[error("degenerate form")]
    DegenerateForm,
    /// A matrix over a quadratic field is not Hermitian for the nontrivial automorphism.
    #[error("matrix is not Hermitian")]
    NotHermitian,
    /// The requested construction case does not match the input data.
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    /// A documented precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A word mentions a generator that the presentation does not have.
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    /// Reduction modulo a prime is impossible for the given data.
    #[error("reduction failure: {0}")]
    Reduction(String),
    /// A group closure grew beyond the configured cap.
    #[error("closure exceeded cap after {0} elements")]
    CapExceeded(usize),
    /// A witness construction has no solution for the given parameters.
    #[error("no witness: {0}")]
    NoWitness(String),
    /// A matrix lives over the wrong field for the requested predicate.
    #[error("wrong field: {0}")]
    WrongField(String),
    /// A constructed object failed its own verification.
    #[error("verification failed: {0}")]
    Verification(String),
}
