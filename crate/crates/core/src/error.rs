//! Errors shared by the analysis modules.

use thiserror::Error;

/// Failure modes of the symbolic and numeric analysis operations.
///
/// Parsing and network construction have their own error types
/// ([`crate::parse::ParseError`], [`crate::network::NetworkError`]); this
/// enum covers everything downstream of a well-formed [`crate::Network`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("expected a 2-column matrix, got {0} columns")]
    NotTwoColumns(usize),
    #[error("operation requires exactly 2 reactions, network has {0}")]
    NotTwoReactions(usize),
    #[error("operation requires exactly 2 species, network has {0}")]
    NotTwoSpecies(usize),
    #[error("rate constants must be strictly positive")]
    NonPositiveRate,
    #[error("rate vector has {found} entries, network has {expected} reactions")]
    RateCountMismatch { expected: usize, found: usize },
    #[error("positive steady-state variety is empty or rate-dependent")]
    EmptyPssv,
    #[error("unsupported network shape: {0}")]
    Unsupported(String),
}
