//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by slope construction, the surgery formula, and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A surgery coefficient that cannot be normalized to p/q with q >= 1, p != 0.
    #[error("invalid surgery slope {p}/{q}: {reason}")]
    InvalidSlope {
        p: i64,
        q: i64,
        reason: &'static str,
    },

    /// An intermediate value escaped the exact integer range. Results are
    /// never silently wrapped; the offending computation is named.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// A precondition on operation arguments was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A name that is not in the built-in profile catalog.
    #[error("unknown profile `{name}` (built-ins: unknot, T(2,N) for odd N >= 3, P(-2,3,7))")]
    UnknownProfile { name: String },

    /// A profile that fails one or more structural invariants.
    #[error("invalid profile `{name}`: {violations}")]
    InvalidProfile { name: String, violations: String },

    /// Malformed profile or job document.
    #[error("parse error in {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    /// An obstruction query pinned a prime the profile data is not asserted for.
    #[error("profile `{name}` does not assert coefficient prime {prime}")]
    CoefficientMismatch { name: String, prime: u64 },

    /// Filesystem failure, with the path that caused it.
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
