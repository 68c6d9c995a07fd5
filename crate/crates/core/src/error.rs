//! Crate-wide error type and its classification into exit categories.

use thiserror::Error;

use crate::diagram::DiagramError;
use crate::homset::HomsetError;
use crate::polynomial::ParsePolynomialError;
use crate::quandle::QuandleError;
use crate::quiver::QuiverError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Homset(#[from] HomsetError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Polynomial(#[from] ParsePolynomialError),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or invalid input.
    Input,
    /// A size cap or search limit was hit.
    Limit,
    /// A computed result violated an internal invariant.
    Internal,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Input => 1,
            ErrorKind::Limit => 2,
            ErrorKind::Internal => 3,
        }
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Homset(_) | Error::Quiver(QuiverError::TooLarge { .. }) => ErrorKind::Limit,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }
}
