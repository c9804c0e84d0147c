use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("{0}")]
    Domain(String),

    #[error("n = {n} exceeds the exhaustive bound {bound}")]
    Resource { n: usize, bound: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub fn check_len(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::Dimension { expected, found })
        }
    }

    pub fn check_bound(n: usize, bound: usize) -> Result<()> {
        if n <= bound {
            Ok(())
        } else {
            Err(Error::Resource { n, bound })
        }
    }
}
