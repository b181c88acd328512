use thiserror::Error;

/// Errors surfaced by state construction, payoff evaluation, and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A value violated a contract it was required to satisfy on entry.
    #[error("contract violation: {0}")]
    Contract(String),
    /// The follower's payoff is unbounded above, so no best response exists.
    #[error("non-concave follower problem: {0}")]
    NonConcave(String),
    /// The instance is degenerate (a defining denominator vanishes).
    #[error("degenerate instance: {0}")]
    Degenerate(String),
    /// A bracketing search was handed an interval without the required sign change.
    #[error("bracket error: {0}")]
    Bracket(String),
    /// An iterative solver failed to converge.
    #[error("solver error: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
