//! Exact q-boson Fock realizations of the quantum algebras `A_{n-1}^q`.
//!
//! Everything here works over Laurent polynomials in a fixed root `t = q^(1/D)`
//! of the deformation parameter with arbitrary-precision rational coefficients,
//! so every relation check ends in a literal comparison with the zero operator.
//!
//! - [`ring`]: Laurent scalars, q-numbers and the scalar text format.
//! - [`fock`]: fixed-level sectors of the n-mode Fock space and sparse operators on them.
//! - [`generators`]: Chevalley and Cartan–Weyl generators, regular functionals, the
//!   R-matrix, the `su_q(2)` Casimir and number-operator reconstructions.
//! - [`hopf`]: formal elements with coproduct, counit and antipode, evaluated on sectors.
//! - [`embedding`]: `A_{k1-1}^q ⊕ A_{k2-1}^q ⊂ A_{k1k2-1}^q` built by three routes.
//! - [`certify`]: relation tables and the residual engine.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certify;
pub mod embedding;
mod error;
pub mod fock;
pub mod generators;
pub mod hopf;
pub mod ring;

pub use error::Error;
pub use fock::{LocalizedOperator, RationalOperator, Sector, Space, SparseOperator};
pub use ring::{Laurent, Localized, QExponent, RootConfig};

pub type Result<T, E = Error> = core::result::Result<T, E>;
