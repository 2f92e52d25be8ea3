use alloc::string::String;

use crate::fock::FockError;
use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("operator has {found} modes, expected {expected}")]
    ModeMismatch { expected: usize, found: usize },
    #[error("element of tensor rank {rank} evaluated on {legs} sectors")]
    RankMismatch { rank: usize, legs: usize },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
