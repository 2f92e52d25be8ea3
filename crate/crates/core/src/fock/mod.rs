//! Fixed-level sectors of the n-mode q-boson Fock space and exact sparse
//! operators between them.
//!
//! States use the non-normalized monomial basis `|m⟩ = Π (a_i^+)^{m_i} |0⟩`,
//! so `a_i^+` has coefficient 1 and `a_i^-` has coefficient `[m_i]_q`. Every
//! entry stays a Laurent polynomial; commutation relations do not depend on
//! the basis normalization.

mod boson;
mod operator;
mod sector;

pub use boson::{annihilation, creation, hop, number, number_power, total_number};
pub use operator::{Coefficient, LocalizedOperator, Operator, RationalOperator, SparseOperator};
pub use sector::{dimension_formula, Sector, Space, DEFAULT_DIMENSION_CAP};

use alloc::string::String;

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FockError {
    #[error("mode {mode} out of range 1..={modes}")]
    ModeOutOfRange { mode: usize, modes: usize },
    #[error("sector n={modes}, m={level} has dimension {dim}, above the cap of {cap} states")]
    DimensionCap { modes: usize, level: u32, dim: u128, cap: usize },
    #[error("{op}: space mismatch between {left} and {right}")]
    SpaceMismatch { op: &'static str, left: String, right: String },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} operator")]
    EntryOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("a sector needs at least one mode")]
    NoModes,
    #[error("operator entries are not Laurent polynomials")]
    NotPolynomial,
    #[error(transparent)]
    Ring(#[from] RingError),
}
