use serde::Serialize;
use thiserror::Error;

use crate::wronskian::AdmissibilityReport;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("admissibility violation: {message}")]
    Admissibility {
        message: String,
        report: Option<Box<AdmissibilityReport>>,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("internal invariant failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Admissibility { .. } => ErrorKind::Admissibility,
            Error::Domain(_) => ErrorKind::Domain,
            Error::Degenerate(_) => ErrorKind::Degenerate,
            Error::Convergence(_) => ErrorKind::Convergence,
            Error::Internal(_) => ErrorKind::Internal,
            Error::Parse(_) => ErrorKind::Parse,
        }
    }

    pub(crate) fn admissibility(message: impl Into<String>) -> Self {
        Error::Admissibility {
            message: message.into(),
            report: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Admissibility,
    Domain,
    Degenerate,
    Convergence,
    Internal,
    Parse,
}

pub type Result<T> = std::result::Result<T, Error>;
