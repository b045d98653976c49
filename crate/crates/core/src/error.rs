//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or combining operators.
///
/// Constructors validate eagerly: an input that violates an invariant is
/// rejected here rather than silently repaired, so the message always names
/// the invariant that failed.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (max |M - M\u{2020}| element = {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (max |U\u{2020}U - I| element = {0:.3e})")]
    NotUnitary(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue = {0:.3e})")]
    NotPsd(f64),

    #[error("trace must be 1 (got deviation {0:.3e})")]
    NotUnitTrace(f64),

    #[error("state vector is not normalized (norm deviation {0:.3e})")]
    NotNormalized(f64),

    #[error("POVM elements do not sum to identity (max deviation {0:.3e})")]
    IncompletePovm(f64),

    #[error("Kraus operators violate the normalization condition (max deviation {0:.3e})")]
    BrokenChannel(f64),

    #[error("priors must be nonnegative and sum to 1 (got {0} and {1})")]
    BadPriors(f64, f64),

    #[error("not a probability distribution: {0}")]
    BadDistribution(String),

    #[error("state is singular (min eigenvalue = {0:.3e}); operation requires invertible states")]
    SingularState(f64),

    #[error("outcome has zero probability; posterior is undefined")]
    ImpossibleOutcome,

    #[error("states do not commute (max commutator element = {0:.3e})")]
    NonCommuting(f64),

    #[error("ancilla projectors are not orthogonal and complete (max deviation {0:.3e})")]
    BadProjectors(f64),

    #[error("degenerate state pair: {0}")]
    DegeneratePair(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
