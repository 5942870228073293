use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// k < 2 or n < 2 where a corresponding graph is required.
    #[error("infeasible parameters: graph construction requires k >= 2 and n >= 2 (got k={k}, n={n})")]
    InfeasibleParameters { k: usize, n: usize },

    /// No H(1, n) exists for n > 1.
    #[error("no adjacency-hopping de Bruijn sequence exists for k=1 and n={n} > 1")]
    NonexistentSequence { n: usize },

    /// A desk-scale size cap was exceeded.
    #[error("size limit exceeded: {what} = {actual} exceeds cap {cap}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    /// A code value is outside 0..k-1.
    #[error("code {code} out of range for k={k}")]
    CodeOutOfRange { code: u32, k: usize },

    /// Truncation length outside n..=q.
    #[error("invalid truncation length {len}: must be in {min}..={max}")]
    InvalidLength { len: usize, min: usize, max: usize },

    /// Two windows of the input sequence are identical.
    #[error("duplicate window {window:?} at positions {first} and {second}")]
    DuplicateWindow {
        window: Vec<u32>,
        first: usize,
        second: usize,
    },

    /// A queried window does not occur in the sequence.
    #[error("window {window:?} not found in sequence")]
    WindowNotFound { window: Vec<u32> },

    /// The closed-form count came out non-integral (implementation bug).
    #[error("integrality violation evaluating the closed-form count for k={k}, n={n}")]
    IntegralityViolation { k: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
