use thiserror::Error;

/// Malformed input data, as opposed to a violated law.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("dangling identifier: {0}")]
    Dangling(String),
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("pair ({0}, {1}) is not composable")]
    NotComposable(String, String),
    #[error("ill-typed component {name}: {detail}")]
    IllTyped { name: String, detail: String },
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A construction that the theory guarantees failed on valid input.
    #[error("falsified: {0}")]
    Falsified(String),
}

pub type Result<T, E = StructureError> = std::result::Result<T, E>;
