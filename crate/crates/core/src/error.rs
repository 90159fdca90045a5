use num_complex::Complex64;
use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma function evaluated at a nonpositive integer.
    #[error("gamma function pole at z = {0}")]
    Pole(Complex64),

    /// A series did not reach its termination criterion.
    #[error("series did not converge within {max_terms} terms (last |term| = {last_term:.3e})")]
    Convergence { max_terms: usize, last_term: f64 },

    /// The 2F1 connection formula is invalid because p3 - p1 - p2 ~ 0,
    /// which in this artifact signals k ~ 0.
    #[error("degenerate connection-formula parameters: |p3 - p1 - p2| = {0:.3e} < 1e-8")]
    DegenerateParameter(f64),

    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// k^2 = 0 exactly; the phase shift is undefined there.
    #[error("degenerate channel: k^2 = 0 exactly")]
    DegenerateChannel,

    /// The Varshni-Shukla index radicand is negative, so lambda is complex.
    #[error("complex index: lambda radicand {0} is negative")]
    ComplexIndex(f64),

    /// Operation requires a real (above-threshold) wave number.
    #[error("below-threshold channel: k is not real")]
    BelowThreshold,

    /// Numerov solution exceeded 1e300 in magnitude.
    #[error("wave function overflow at r = {0} (below-threshold input?)")]
    Overflow(f64),

    /// Two-point sine fit stayed ill-conditioned after retries.
    #[error("phase match ill-conditioned after retries")]
    Match,

    /// Root search found no sign change in the window.
    #[error("no root bracketed in ({0}, {1})")]
    NoRoot(f64, f64),

    /// Shooting window does not bracket the requested node count.
    #[error("node count {found} does not bracket target {want}")]
    NodeCount { found: usize, want: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
