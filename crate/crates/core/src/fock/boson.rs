use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{FockError, Sector, Space, SparseOperator};
use crate::ring::{q_integer, q_power, Laurent, QExponent, RootConfig};

fn check_mode(mode: usize, sector: &Sector) -> Result<usize, FockError> {
    if mode == 0 || mode > sector.modes() {
        return Err(FockError::ModeOutOfRange { mode, modes: sector.modes() });
    }
    Ok(mode - 1)
}

/// `a_i^+ : Γ^[m] → Γ^[m+1]`, coefficient 1 on the monomial basis. Modes are 1-based.
pub fn creation(root: RootConfig, mode: usize, from: &Sector) -> Result<SparseOperator, FockError> {
    let i = check_mode(mode, from)?;
    let to = from.shifted(1);
    let mut op = SparseOperator::zero(root, Space::from(from), Space::from(&to));
    let mut target: Vec<u32> = Vec::with_capacity(from.modes());
    for (col, state) in from.basis().iter().enumerate() {
        target.clear();
        target.extend_from_slice(state);
        target[i] += 1;
        let row = to.index_of(&target).expect("raised state lies in the next sector");
        op.accumulate(row, col, Laurent::one(root));
    }
    Ok(op)
}

/// `a_i^- : Γ^[m] → Γ^[m−1]` with `a_i^-|…,m_i,…⟩ = [m_i]_q |…,m_i−1,…⟩`.
/// On the vacuum sector the codomain is the empty sector.
pub fn annihilation(root: RootConfig, mode: usize, from: &Sector) -> Result<SparseOperator, FockError> {
    let i = check_mode(mode, from)?;
    let to = from.shifted(-1);
    let mut op = SparseOperator::zero(root, Space::from(from), Space::from(&to));
    let mut target: Vec<u32> = Vec::with_capacity(from.modes());
    for (col, state) in from.basis().iter().enumerate() {
        if state[i] == 0 {
            continue;
        }
        target.clear();
        target.extend_from_slice(state);
        target[i] -= 1;
        let row = to.index_of(&target).expect("lowered state lies in the previous sector");
        op.accumulate(row, col, q_integer(root, state[i] as i64));
    }
    Ok(op)
}

/// `N_i`, diagonal with the occupation numbers.
pub fn number(root: RootConfig, mode: usize, on: &Sector) -> Result<SparseOperator, FockError> {
    let i = check_mode(mode, on)?;
    Ok(SparseOperator::diagonal(root, Space::from(on), |k| Laurent::from_integer(root, on.state(k)[i] as i64)))
}

/// `q^(e·N_i)`.
pub fn number_power(root: RootConfig, mode: usize, e: QExponent, on: &Sector) -> Result<SparseOperator, FockError> {
    let i = check_mode(mode, on)?;
    let entries = on
        .basis()
        .iter()
        .enumerate()
        .map(|(k, s)| Ok((k, k, q_power(root, e * s[i] as i64)?)))
        .collect::<Result<Vec<_>, FockError>>()?;
    SparseOperator::from_entries(root, Space::from(on), Space::from(on), entries)
}

/// `N = Σ N_i`, which is `m` times the identity on level `m`.
pub fn total_number(root: RootConfig, on: &Sector) -> SparseOperator {
    let m = BigRational::from_integer(BigInt::from(on.level().max(0)));
    SparseOperator::scalar(root, Space::from(on), Laurent::constant(root, m))
}

/// The hopping operator `a_i^+ a_j^-` on a sector (square).
pub fn hop(root: RootConfig, i: usize, j: usize, on: &Sector) -> Result<SparseOperator, FockError> {
    let down = annihilation(root, j, on)?;
    let lowered = on.shifted(-1);
    let up = creation(root, i, &lowered)?;
    // on the vacuum the composite passes through the empty sector; creation from it
    // lands in a level-0 sector identical to `on`
    up.try_compose(&down)
}
