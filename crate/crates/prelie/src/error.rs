//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error in a tree / linear-combination / binary-tree expression.
    /// `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A name that is not a generator of the alphabet in use.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// Alphabet file rejected (duplicate names, degree 0, bad JSON shape...).
    #[error("invalid alphabet: {0}")]
    BadAlphabet(String),

    /// A configured resource cap was exceeded (degree, seed instances,
    /// terms per polynomial).
    #[error("resource cap exceeded: {what} > {limit}")]
    CapExceeded { what: String, limit: usize },

    /// Operation asked for a degree outside the computed range.
    #[error("degree {requested} exceeds computed bound {available}")]
    DegreeOutOfRange { requested: u64, available: u64 },

    /// An argument that must be homogeneous was not.
    #[error("expected a homogeneous element: {0}")]
    NotHomogeneous(String),

    /// Zero polynomial where a leading term is required.
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    /// An internal rank assertion failed (e.g. two dimension oracles
    /// disagree). Signals a bug, not bad input; fail loudly.
    #[error("rank defect: {0}")]
    RankDefect(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
