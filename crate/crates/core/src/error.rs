use thiserror::Error;

use crate::order::LexOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0}")]
    Domain(String),

    #[error("{what} = {value} exceeds the configured guard {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("point set is not extremal: standard monomials differ for orders {} and {}", .witness.0, .witness.1)]
    NotExtremal { witness: (LexOrder, LexOrder) },

    #[error("set system is not shattering-extremal: it shatters {shattered} sets but has {size} members")]
    NotShatteringExtremal { shattered: usize, size: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("singular linear system: the supplied monomials are not a basis of functions on the point set")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
