use std::fmt;

use thiserror::Error;

use crate::td::Violation;

/// Errors produced by parsing, validation and the dynamic programs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("invalid tree decomposition: {}", ViolationList(.0))]
    InvalidDecomposition(Vec<Violation>),

    #[error("expression is not in join-normal form: {0}")]
    NotJoinNormalForm(String),

    /// An exponential routine refused an instance above its size guard.
    #[error("refused: {what} is {actual}, guard allows at most {limit}")]
    Guard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("oracle mismatch: {param} computed {computed}, exhaustive search gives {oracle}")]
    OracleMismatch {
        param: &'static str,
        computed: usize,
        oracle: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

struct ViolationList<'a>(&'a [Violation]);

impl fmt::Display for ViolationList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
