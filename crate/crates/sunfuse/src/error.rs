use thiserror::Error;

/// Error type shared by the whole crate.
///
/// The CLI maps these onto process exit codes: input-shaped problems
/// (`RankMismatch`, `LevelMismatch`, `Domain`) exit 2, while `Inconsistency`
/// and `Internal` — which signal a broken invariant rather than bad input —
/// exit 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two weights (or a weight and an explicit rank) disagree on N.
    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    /// Two affine weights disagree on the level.
    #[error("level mismatch: {0}")]
    LevelMismatch(String),

    /// An argument is outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A mathematical invariant failed (e.g. a decomposition that a complete
    /// basis guarantees does not exist).
    #[error("inconsistency: {0}")]
    Inconsistency(String),

    /// An internal guard tripped; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// The process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::RankMismatch(_) | Error::LevelMismatch(_) | Error::Domain(_) => 2,
            Error::Inconsistency(_) | Error::Internal(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
