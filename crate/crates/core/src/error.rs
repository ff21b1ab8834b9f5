//! Error types shared across the crate.

use thiserror::Error;

/// Failure while parsing the textual form of an ordered multiset partition.
///
/// `position` is the 1-based byte offset into the input at which the
/// offending token starts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty block at position {position}")]
    EmptyBlock { position: usize },
    #[error("invalid character {found:?} at position {position}")]
    InvalidCharacter { found: char, position: usize },
    #[error("invalid number at position {position}")]
    InvalidNumber { position: usize },
    #[error("repeated element {element} in block at position {position}")]
    RepeatedElement { element: u32, position: usize },
    #[error("block elements not strictly increasing at position {position}")]
    NotIncreasing { position: usize },
}

/// Violation of a structural precondition (invalid Dyck path, labels,
/// decoration marks, insertion-domain data, and the like).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("block must be non-empty and strictly increasing")]
    InvalidBlock,
    #[error("column sequence is not a valid Dyck path: {reason}")]
    InvalidPath { reason: String },
    #[error("labels violate parking-function constraints: {reason}")]
    InvalidLabels { reason: String },
    #[error("decoration marks are not contained in the eligible row set")]
    InvalidMarks,
    #[error("letter {letter} out of range for modulus {modulus}")]
    LetterOutOfRange { letter: u32, modulus: u32 },
    #[error("insertion input violates its domain: {reason}")]
    InvalidInsertionInput { reason: String },
    #[error("parameter violation: {reason}")]
    InvalidParameter { reason: String },
}

impl DomainError {
    pub(crate) fn path(reason: impl Into<String>) -> Self {
        DomainError::InvalidPath {
            reason: reason.into(),
        }
    }

    pub(crate) fn labels(reason: impl Into<String>) -> Self {
        DomainError::InvalidLabels {
            reason: reason.into(),
        }
    }

    pub(crate) fn insertion(reason: impl Into<String>) -> Self {
        DomainError::InvalidInsertionInput {
            reason: reason.into(),
        }
    }

    pub(crate) fn parameter(reason: impl Into<String>) -> Self {
        DomainError::InvalidParameter {
            reason: reason.into(),
        }
    }
}
