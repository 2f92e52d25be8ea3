use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::FockError;

pub const DEFAULT_DIMENSION_CAP: usize = 100_000;

/// `(n+m−1)! / (m!(n−1)!)`, saturating at `u128::MAX`.
pub fn dimension_formula(modes: usize, level: u32) -> u128 {
    if modes == 0 {
        return 0;
    }
    // C(n−1+m, m) as a running product; each partial product is itself a binomial
    let n1 = (modes - 1) as u128;
    let mut acc: u128 = 1;
    for i in 1..=level as u128 {
        acc = match acc.checked_mul(n1 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// The level-`m` subspace of the `n`-mode Fock space with its lexicographically
/// ordered basis of occupation vectors. A negative level is the zero space.
#[derive(Clone)]
pub struct Sector {
    modes: usize,
    level: i64,
    basis: Arc<[Box<[u32]>]>,
}

impl Sector {
    pub fn new(modes: usize, level: u32) -> Result<Self, FockError> {
        Sector::with_cap(modes, level, DEFAULT_DIMENSION_CAP)
    }

    pub fn with_cap(modes: usize, level: u32, cap: usize) -> Result<Self, FockError> {
        if modes == 0 {
            return Err(FockError::NoModes);
        }
        let dim = dimension_formula(modes, level);
        if dim > cap as u128 {
            return Err(FockError::DimensionCap { modes, level, dim, cap });
        }
        let mut basis = Vec::with_capacity(dim as usize);
        let mut current = alloc::vec![0u32; modes];
        enumerate(&mut current, 0, level, &mut basis);
        Ok(Sector { modes, level: level as i64, basis: basis.into() })
    }

    /// The zero space standing in for level −1.
    pub fn empty(modes: usize) -> Self {
        Sector { modes, level: -1, basis: Vec::new().into() }
    }

    /// The sector `delta` levels up (or down), without a dimension cap.
    pub fn shifted(&self, delta: i64) -> Sector {
        let level = self.level + delta;
        if level < 0 {
            Sector::empty(self.modes)
        } else {
            Sector::with_cap(self.modes, level as u32, usize::MAX).expect("modes is positive")
        }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Box<[u32]>] {
        &self.basis
    }

    pub fn state(&self, index: usize) -> &[u32] {
        &self.basis[index]
    }

    pub fn index_of(&self, occupation: &[u32]) -> Option<usize> {
        self.basis.binary_search_by(|b| (**b).cmp(occupation)).ok()
    }
}

fn enumerate(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Box<[u32]>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.to_vec().into_boxed_slice());
        return;
    }
    for k in 0..=remaining {
        current[pos] = k;
        enumerate(current, pos + 1, remaining - k, out);
    }
    current[pos] = 0;
}

impl PartialEq for Sector {
    fn eq(&self, other: &Self) -> bool {
        self.modes == other.modes && self.level == other.level
    }
}

impl Eq for Sector {}

impl fmt::Debug for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sector(n={}, m={})", self.modes, self.level)
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ(n={}, m={})", self.modes, self.level)
    }
}

/// A tensor product of sectors; a single sector is a one-factor space.
/// Product basis indices are left-factor major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Space {
    factors: Vec<Sector>,
}

impl Space {
    pub fn new(factors: Vec<Sector>) -> Self {
        Space { factors }
    }

    pub fn factors(&self) -> &[Sector] {
        &self.factors
    }

    pub fn as_sector(&self) -> Option<&Sector> {
        match self.factors.as_slice() {
            [s] => Some(s),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Sector::dim).product()
    }

    pub fn tensor(&self, other: &Space) -> Space {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Space { factors }
    }

    /// Per-factor basis indices of a product index.
    pub fn split_index(&self, mut index: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % f.dim();
            index /= f.dim();
        }
        out
    }

    pub fn join_index(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.factors).fold(0, |acc, (p, f)| acc * f.dim() + p)
    }

    /// Basis label like `(1,0)⊗(0,2)`.
    pub fn label(&self, index: usize) -> String {
        let parts = self.split_index(index);
        let mut out = String::new();
        for (k, (p, f)) in parts.iter().zip(&self.factors).enumerate() {
            if k > 0 {
                out.push('⊗');
            }
            let occ: Vec<String> = f.state(*p).iter().map(|x| format!("{x}")).collect();
            out.push('(');
            out.push_str(&occ.join(","));
            out.push(')');
        }
        out
    }
}

impl From<Sector> for Space {
    fn from(s: Sector) -> Self {
        Space { factors: alloc::vec![s] }
    }
}

impl From<&Sector> for Space {
    fn from(s: &Sector) -> Self {
        Space { factors: alloc::vec![s.clone()] }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ⊗ ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
