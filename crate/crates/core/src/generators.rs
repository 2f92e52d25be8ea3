//! Concrete generator families of `A_{n-1}^q` as operators on one Fock sector.
//!
//! Indices are 1-based throughout. `Y_{ij}^+` exists for `i < j`, `Y_{ij}^-`
//! for `i > j`; the sign is implied by the index order. The Cartan elements
//! `H_{ij} = N_i − N_j` are diagonal, and every function of them (`q^{e·H}`,
//! `[H]_q`) is taken eigenvalue by eigenvalue.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{ToPrimitive, Zero};

use crate::fock::{self, LocalizedOperator, Sector, Space, SparseOperator};
use crate::ring::{q_delta, q_integer, q_number, q_power, Laurent, Localized, QExponent, RootConfig};
use crate::{Error, Result};

/// Which Borel half a `Y` generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of_pair(i: usize, j: usize) -> Option<Sign> {
        match i.cmp(&j) {
            core::cmp::Ordering::Less => Some(Sign::Plus),
            core::cmp::Ordering::Greater => Some(Sign::Minus),
            core::cmp::Ordering::Equal => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `Y_ii^± = ∓q^(∓1/2)/(q − q⁻¹)`.
pub fn diagonal_y(root: RootConfig, sign: Sign) -> Result<Localized> {
    let s = sign.value();
    let num = q_power(root, QExponent::new(-s, 2))?.scale(&BigRational::from_integer((-s).into()));
    Ok(Localized::new(num, 1))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn check_modes(n: usize, sector: &Sector) -> Result<()> {
    if sector.modes() != n {
        return Err(Error::ModeMismatch { expected: n, found: sector.modes() });
    }
    if n < 1 {
        return Err(Error::InvalidConfig("at least one mode is required".into()));
    }
    Ok(())
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    Ok(())
}

/// Diagonal operator `q^(f(state))` for an exponent computed per basis state.
pub(crate) fn q_diagonal(
    root: RootConfig,
    sector: &Sector,
    mut exponent: impl FnMut(&[u32]) -> Ratio<i64>,
) -> Result<SparseOperator> {
    let entries = sector
        .basis()
        .iter()
        .enumerate()
        .map(|(k, s)| Ok((k, k, q_power(root, exponent(s).into())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseOperator::from_entries(root, Space::from(sector), Space::from(sector), entries)?)
}

/// Diagonal entries of an operator as exact rationals; they must be constants.
pub(crate) fn diagonal_values(op: &SparseOperator) -> Result<Vec<Ratio<i64>>> {
    (0..op.domain().dim())
        .map(|k| {
            let c = op.entry(k, k).as_constant().ok_or_else(|| {
                Error::InvalidGenerator(format!("diagonal entry {k} of a Cartan element is not a number"))
            })?;
            match (c.numer().to_i64(), c.denom().to_i64()) {
                (Some(n), Some(d)) => Ok(Ratio::new(n, d)),
                _ => Err(Error::InvalidGenerator("Cartan eigenvalue too large".into())),
            }
        })
        .collect()
}

/// `H_i, Y_i^±` for `i = 1..n−1` (Chevalley generators).
#[derive(Clone, Debug, PartialEq)]
pub struct ChevalleySet {
    pub n: usize,
    pub cartan: Vec<SparseOperator>,
    pub raising: Vec<SparseOperator>,
    pub lowering: Vec<SparseOperator>,
}

/// `H_i = N_i − N_{i+1}`, `Y_i^+ = a_i^+ a_{i+1}^-`, `Y_i^- = a_{i+1}^+ a_i^-`.
pub fn chevalley(root: RootConfig, n: usize, sector: &Sector) -> Result<ChevalleySet> {
    check_modes(n, sector)?;
    let mut set = ChevalleySet { n, cartan: Vec::new(), raising: Vec::new(), lowering: Vec::new() };
    for i in 1..n {
        set.cartan.push(cartan_diagonal(root, i, i + 1, sector));
        set.raising.push(fock::hop(root, i, i + 1, sector)?);
        set.lowering.push(fock::hop(root, i + 1, i, sector)?);
    }
    Ok(set)
}

fn cartan_diagonal(root: RootConfig, i: usize, j: usize, sector: &Sector) -> SparseOperator {
    SparseOperator::diagonal(root, Space::from(sector), |k| {
        let s = sector.state(k);
        Laurent::from_integer(root, s[i - 1] as i64 - s[j - 1] as i64)
    })
}

/// A full Cartan–Weyl generator set: `H_{ij}` for all `i ≠ j` and `Y_{ij}^±`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    n: usize,
    root: RootConfig,
    space: Space,
    y: BTreeMap<(usize, usize), SparseOperator>,
    cartan: BTreeMap<(usize, usize), SparseOperator>,
}

impl GeneratorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> RootConfig {
        self.root
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn identity(&self) -> SparseOperator {
        SparseOperator::identity(self.root, self.space.clone())
    }

    pub fn zero(&self) -> SparseOperator {
        SparseOperator::zero(self.root, self.space.clone(), self.space.clone())
    }

    /// `Y_{ij}^±` for `i ≠ j`.
    pub fn y(&self, i: usize, j: usize) -> Result<&SparseOperator> {
        check_index(i, self.n)?;
        check_index(j, self.n)?;
        self.y.get(&(i, j)).ok_or_else(|| Error::InvalidGenerator(format!("Y({i},{j}) is a scalar, not an operator")))
    }

    /// `H_{ij}`; `H_{ii} = 0` and `H_{ji} = −H_{ij}`.
    pub fn h(&self, i: usize, j: usize) -> Result<SparseOperator> {
        check_index(i, self.n)?;
        check_index(j, self.n)?;
        Ok(match i.cmp(&j) {
            core::cmp::Ordering::Equal => self.zero(),
            core::cmp::Ordering::Less => self.cartan[&(i, j)].clone(),
            core::cmp::Ordering::Greater => -&self.cartan[&(j, i)],
        })
    }

    /// `q^(e·H_{ij})`.
    pub fn q_cartan(&self, i: usize, j: usize, e: QExponent) -> Result<SparseOperator> {
        let values = diagonal_values(&self.h(i, j)?)?;
        let entries = values
            .iter()
            .enumerate()
            .map(|(k, v)| Ok((k, k, q_power(self.root, e * QExponent::from(*v))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseOperator::from_entries(self.root, self.space.clone(), self.space.clone(), entries)?)
    }

    /// `[H_{ij}]_q`; the eigenvalues must be integers.
    pub fn q_number_cartan(&self, i: usize, j: usize) -> Result<SparseOperator> {
        let values = diagonal_values(&self.h(i, j)?)?;
        let entries = values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if !v.is_integer() {
                    return Err(Error::InvalidGenerator(format!("[H({i},{j})]_q needs integer eigenvalues")));
                }
                Ok((k, k, q_integer(self.root, v.to_integer())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseOperator::from_entries(self.root, self.space.clone(), self.space.clone(), entries)?)
    }

    /// Replaces `Y_{ij}`; used by mutation tests.
    pub fn set_y(&mut self, i: usize, j: usize, op: SparseOperator) {
        self.y.insert((i, j), op);
    }

    /// Replaces `H_{ij}` for `i < j`; used by mutation tests.
    pub fn set_h(&mut self, i: usize, j: usize, op: SparseOperator) {
        self.cartan.insert((i.min(j), i.max(j)), if i < j { op } else { -op });
    }

    /// Operators by display name: `Y+(1,2)`, `Y-(2,1)`, `H(1,2)`.
    pub fn named_operators(&self) -> Vec<(String, &SparseOperator)> {
        let mut out: Vec<(String, &SparseOperator)> = Vec::new();
        for ((i, j), op) in &self.cartan {
            out.push((format!("H({i},{j})"), op));
        }
        for ((i, j), op) in &self.y {
            let s = if i < j { '+' } else { '-' };
            out.push((format!("Y{s}({i},{j})"), op));
        }
        out
    }

    /// Assembles a set from arbitrary square operators on one space.
    ///
    /// `y` must hold every off-diagonal pair and `cartan` every `i < j` pair.
    pub fn from_parts(
        n: usize,
        root: RootConfig,
        space: Space,
        y: BTreeMap<(usize, usize), SparseOperator>,
        cartan: BTreeMap<(usize, usize), SparseOperator>,
    ) -> Result<GeneratorSet> {
        for i in 1..=n {
            for j in 1..=n {
                let op = match i.cmp(&j) {
                    core::cmp::Ordering::Equal => continue,
                    core::cmp::Ordering::Less => {
                        cartan.get(&(i, j)).ok_or_else(|| Error::InvalidGenerator(format!("missing H({i},{j})")))?
                    }
                    core::cmp::Ordering::Greater => &y[&(j, i)],
                };
                let y_op = y.get(&(i, j)).ok_or_else(|| Error::InvalidGenerator(format!("missing Y({i},{j})")))?;
                for o in [op, y_op] {
                    if o.domain() != &space || o.codomain() != &space {
                        return Err(Error::InvalidGenerator(format!("generator ({i},{j}) is not square on {space}")));
                    }
                }
            }
        }
        Ok(GeneratorSet { n, root, space, y, cartan })
    }

    /// Full set from Chevalley generators: `H_{ij} = Σ_{i≤l<j} H_l` and the
    /// non-adjacent `Y` through the first Borel relations,
    /// `Y_{ij}^+ = [Y_{i,i+1}^+, Y_{i+1,j}^+]_q`, `Y_{ij}^- = [Y_{i,i−1}^-, Y_{i−1,j}^-]_{q⁻¹}`.
    pub fn from_chevalley(set: &ChevalleySet) -> Result<GeneratorSet> {
        let n = set.n;
        let first =
            set.cartan.first().ok_or_else(|| Error::InvalidConfig("rank-zero algebra has no generators".into()))?;
        let root = first.root();
        let space = first.domain().clone();
        let mut out = GeneratorSet { n, root, space, y: BTreeMap::new(), cartan: BTreeMap::new() };
        for i in 1..n {
            let mut acc = SparseOperator::zero(root, out.space.clone(), out.space.clone());
            for j in i + 1..=n {
                acc = &acc + &set.cartan[j - 2];
                out.cartan.insert((i, j), acc.clone());
            }
        }
        for i in 1..n {
            out.y.insert((i, i + 1), set.raising[i - 1].clone());
            out.y.insert((i + 1, i), set.lowering[i - 1].clone());
        }
        for gap in 2..n {
            for i in 1..=n - gap {
                let j = i + gap;
                let plus = SparseOperator::q_commutator(&out.y[&(i, i + 1)], &out.y[&(i + 1, j)], 1.into())?;
                out.y.insert((i, j), plus);
                let minus = SparseOperator::q_commutator(&out.y[&(j, j - 1)], &out.y[&(j - 1, i)], (-1).into())?;
                out.y.insert((j, i), minus);
            }
        }
        Ok(out)
    }
}

/// The Cartan–Weyl realization
/// `H_{ij} = N_i − N_j`, `Y_{ij}^± = a_i^+ a_j^- q^(∓Σ N_k)` over `k` strictly between `i` and `j`.
pub fn cartan_weyl(root: RootConfig, n: usize, sector: &Sector) -> Result<GeneratorSet> {
    check_modes(n, sector)?;
    let space = Space::from(sector);
    let mut out = GeneratorSet { n, root, space, y: BTreeMap::new(), cartan: BTreeMap::new() };
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if i < j {
                out.cartan.insert((i, j), cartan_diagonal(root, i, j, sector));
            }
            out.y.insert((i, j), cartan_weyl_y(root, i, j, sector)?);
        }
    }
    Ok(out)
}

/// A single `Y_{ij}^±` of the Cartan–Weyl realization.
pub fn cartan_weyl_y(root: RootConfig, i: usize, j: usize, sector: &Sector) -> Result<SparseOperator> {
    let n = sector.modes();
    check_index(i, n)?;
    check_index(j, n)?;
    let sign = Sign::of_pair(i, j).ok_or_else(|| Error::InvalidGenerator(format!("Y({i},{i}) is a scalar")))?;
    let (lo, hi) = (i.min(j), i.max(j));
    let dressing = q_diagonal(root, sector, |s| {
        let between: i64 = s[lo..hi - 1].iter().map(|&x| x as i64).sum();
        Ratio::from_integer(-sign.value() * between)
    })?;
    Ok(&fock::hop(root, i, j, sector)? * &dressing)
}

/// `q^(e·H_{ij}) = q^(e·(N_i − N_j))`.
pub fn cartan_power(root: RootConfig, i: usize, j: usize, e: QExponent, sector: &Sector) -> Result<SparseOperator> {
    let n = sector.modes();
    check_index(i, n)?;
    check_index(j, n)?;
    q_diagonal(root, sector, |s| e.ratio() * (s[i - 1] as i64 - s[j - 1] as i64))
}

/// How the Cartan elements `H̃_i` (fixed only up to a common shift) are realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanShift {
    /// `H̃_i = N_i`.
    Number,
    /// `H̃_i = N_i − N/n`; needs `n | D/2·…` so that `q^(m/n)` is representable.
    Centered,
}

type IndexPair = (usize, usize);

/// The regular functionals `l_{ij}^±` as an `n×n` array for each sign.
#[derive(Clone, Debug)]
pub struct LFunctionals {
    n: usize,
    plus: Vec<SparseOperator>,
    minus: Vec<SparseOperator>,
}

impl LFunctionals {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, sign: Sign, i: usize, j: usize) -> &SparseOperator {
        let k = (i - 1) * self.n + (j - 1);
        match sign {
            Sign::Plus => &self.plus[k],
            Sign::Minus => &self.minus[k],
        }
    }

    /// Replaces `l_{ij}^±`; used by mutation tests.
    pub fn set(&mut self, sign: Sign, i: usize, j: usize, op: SparseOperator) {
        let k = (i - 1) * self.n + (j - 1);
        match sign {
            Sign::Plus => self.plus[k] = op,
            Sign::Minus => self.minus[k] = op,
        }
    }
}

/// `l_{ij}^± = ∓q^(±1/2)(q − q⁻¹) Y_{ij}^± q^(∓(H̃_i + H̃_j)/2)`, zero on the wrong triangle.
pub fn l_functionals(root: RootConfig, n: usize, sector: &Sector, shift: CartanShift) -> Result<LFunctionals> {
    check_modes(n, sector)?;
    let space = Space::from(sector);
    let m = sector.level().max(0);
    let centre = match shift {
        CartanShift::Number => Ratio::zero(),
        CartanShift::Centered => Ratio::new(m, n as i64),
    };
    let h_tilde = |s: &[u32], i: usize| Ratio::from_integer(s[i - 1] as i64) - centre;
    let mut out = LFunctionals { n, plus: Vec::new(), minus: Vec::new() };
    for sign in [Sign::Plus, Sign::Minus] {
        let sv = sign.value();
        // ∓q^(±1/2)(q − q⁻¹)
        let prefactor = &q_power(root, QExponent::new(sv, 2))?.scale(&rat(-sv, 1)) * &q_delta(root);
        for i in 1..=n {
            for j in 1..=n {
                let dressing = q_diagonal(root, sector, |s| Ratio::new(-sv, 2) * (h_tilde(s, i) + h_tilde(s, j)))?;
                let op = if i == j {
                    let c = Localized::from(prefactor.clone()) * diagonal_y(root, sign)?;
                    let c = c.to_laurent().expect("(q − q⁻¹) cancels the pole of Y_ii");
                    dressing.scale(&c)
                } else if Sign::of_pair(i, j) == Some(sign) {
                    (&cartan_weyl_y(root, i, j, sector)? * &dressing).scale(&prefactor)
                } else {
                    SparseOperator::zero(root, space.clone(), space.clone())
                };
                match sign {
                    Sign::Plus => out.plus.push(op),
                    Sign::Minus => out.minus.push(op),
                }
            }
        }
    }
    Ok(out)
}

/// The `n²×n²` R-matrix without its scalar prefactor `q^(1/n)`:
/// `q Σ e_ii⊗e_ii + Σ_{i≠j} e_ii⊗e_jj + (q − q⁻¹) Σ_{i<j} e_ij⊗e_ji`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    n: usize,
    root: RootConfig,
    entries: BTreeMap<(IndexPair, IndexPair), Laurent>,
}

impl RMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `R_{ij,kl}`.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Laurent {
        self.entries.get(&((i, j), (k, l))).cloned().unwrap_or_else(|| Laurent::zero(self.root))
    }

    /// Nonzero entries `((i, j), (k, l), value)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize), &Laurent)> + '_ {
        self.entries.iter().map(|(k, v)| (k.0, k.1, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }
}

pub fn r_matrix(root: RootConfig, n: usize) -> Result<RMatrix> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!("R-matrix needs n ≥ 2, got {n}")));
    }
    let mut entries = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            let diag = if i == j { q_power(root, 1.into())? } else { Laurent::one(root) };
            entries.insert(((i, j), (i, j)), diag);
            if i < j {
                entries.insert(((i, j), (j, i)), q_delta(root));
            }
        }
    }
    Ok(RMatrix { n, root, entries })
}

/// `C_2 = X^- X^+ + [H/2]_q [H/2 + 1]_q` for the `su_q(2)` of modes `(a, a+1)`.
pub fn casimir_pair(root: RootConfig, a: usize, sector: &Sector) -> Result<LocalizedOperator> {
    let n = sector.modes();
    check_index(a, n)?;
    check_index(a + 1, n)?;
    let raise = fock::hop(root, a, a + 1, sector)?;
    let lower = fock::hop(root, a + 1, a, sector)?;
    let quadratic = (&lower * &raise).to_localized();
    let mut diag = Vec::with_capacity(sector.dim());
    for (k, s) in sector.basis().iter().enumerate() {
        let half_h = QExponent::new(s[a - 1] as i64 - s[a] as i64, 2);
        let v = &q_number(root, half_h)? * &q_number(root, half_h + 1.into())?;
        diag.push((k, k, v));
    }
    let space = Space::from(sector);
    let cartan_part = LocalizedOperator::from_entries(root, space.clone(), space, diag)?;
    Ok(&quadratic + &cartan_part)
}

/// `C_2` for a two-mode sector.
pub fn casimir_su2(root: RootConfig, sector: &Sector) -> Result<LocalizedOperator> {
    check_modes(2, sector)?;
    casimir_pair(root, 1, sector)
}

/// `(q^(N+1) + q^(−N−1) − q − q⁻¹)/(q − q⁻¹)²` for a number `N`.
pub fn casimir_closed_form_value(root: RootConfig, number: i64) -> Result<Localized> {
    let num = q_power(root, (number + 1).into())? + q_power(root, (-number - 1).into())?
        - q_power(root, 1.into())?
        - q_power(root, (-1).into())?;
    Ok(Localized::new(num, 2))
}

/// The closed form evaluated with `N = N_a + N_{a+1}` on each basis state.
pub fn casimir_closed_form(root: RootConfig, a: usize, sector: &Sector) -> Result<LocalizedOperator> {
    check_index(a + 1, sector.modes())?;
    let entries = sector
        .basis()
        .iter()
        .enumerate()
        .map(|(k, s)| Ok((k, k, casimir_closed_form_value(root, s[a - 1] as i64 + s[a] as i64)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalizedOperator::from_entries(root, Space::from(sector), Space::from(sector), entries)?)
}

/// Reads `N = N_a + N_{a+1}` off the Casimir eigenvalues by inverting the closed form.
pub fn number_from_casimir(root: RootConfig, a: usize, sector: &Sector) -> Result<SparseOperator> {
    let c = casimir_pair(root, a, sector)?;
    if !c.is_diagonal() {
        return Err(Error::InvalidGenerator("Casimir is not diagonal on the monomial basis".into()));
    }
    let max = sector.level().max(0);
    let mut values = Vec::with_capacity(sector.dim());
    for k in 0..sector.dim() {
        let eigen = c.entry(k, k);
        let mut found = None;
        for candidate in 0..=max {
            if casimir_closed_form_value(root, candidate)? == eigen {
                found = Some(candidate);
                break;
            }
        }
        let v = found.ok_or_else(|| Error::InvalidGenerator(format!("Casimir eigenvalue {eigen} matches no N")))?;
        values.push(Laurent::from_integer(root, v));
    }
    Ok(SparseOperator::diagonal(root, Space::from(sector), |k| values[k].clone()))
}

/// `N_i = N/n + (1/n) Σ_{s=2}^n Σ_{j<s} H_j − Σ_{j<i} H_j` with `N = m·1`.
pub fn number_from_cartan(root: RootConfig, n: usize, sector: &Sector) -> Result<Vec<SparseOperator>> {
    let chev = chevalley(root, n, sector)?;
    let space = Space::from(sector);
    let inv_n = Laurent::constant(root, rat(1, n as i64));
    let total = fock::total_number(root, sector);
    let mut double_sum = SparseOperator::zero(root, space.clone(), space.clone());
    for s in 2..=n {
        for j in 1..s {
            double_sum = &double_sum + &chev.cartan[j - 1];
        }
    }
    let base = (&total + &double_sum).scale(&inv_n);
    let mut out = Vec::with_capacity(n);
    let mut partial = SparseOperator::zero(root, space.clone(), space);
    for i in 1..=n {
        if i > 1 {
            partial = &partial + &chev.cartan[i - 2];
        }
        out.push(&base - &partial);
    }
    Ok(out)
}

/// Which reading of the total-number recurrence to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceForm {
    /// `N^(k) = k/(k−1) {N^(k−1) + (1/k) Σ_{t=2}^{k} Σ_{p<t} H_p − Σ_{p=1}^{k−1} H_p}`,
    /// with `N^(k)` the number of bosons in modes `1..k`.
    Shifted,
    /// The printed index pattern `N^(k) = (k+1)/k {N^(k−1) + 1/(k+1) Σ_{t=2}^{k+1} Σ_{p<t} H_p − Σ_{p=1}^{k} H_p}`.
    AsPrinted,
}

fn recurrence_step(
    root: RootConfig,
    chev: &ChevalleySet,
    previous: &SparseOperator,
    factor: i64,
    sum_top: usize,
    single_top: usize,
) -> SparseOperator {
    let space = previous.domain().clone();
    let mut double_sum = SparseOperator::zero(root, space.clone(), space.clone());
    for t in 2..=sum_top {
        for p in 1..t {
            double_sum = &double_sum + &chev.cartan[p - 1];
        }
    }
    let mut single = SparseOperator::zero(root, space.clone(), space);
    for p in 1..=single_top {
        single = &single + &chev.cartan[p - 1];
    }
    let inner = previous + &double_sum.scale(&Laurent::constant(root, rat(1, factor))) - single;
    inner.scale(&Laurent::constant(root, rat(factor, factor - 1)))
}

/// Builds `N^(k)` starting from `N^(2)` read off the `su_q(2)` Casimir of modes 1, 2.
///
/// With [`RecurrenceForm::Shifted`] the result is `N^(k)` for `k = sector.modes()`,
/// which equals `m·1`. With [`RecurrenceForm::AsPrinted`] the last step uses the
/// printed bounds and needs `H_k`, so `k = sector.modes() − 1`; the candidate is
/// returned for comparison against [`partial_number`]`(k)`.
pub fn total_number_recurrence(root: RootConfig, sector: &Sector, form: RecurrenceForm) -> Result<SparseOperator> {
    let n = sector.modes();
    let target = match form {
        RecurrenceForm::Shifted => n,
        RecurrenceForm::AsPrinted => n.saturating_sub(1),
    };
    if target < 2 {
        return Err(Error::InvalidConfig(format!("recurrence needs at least {} modes", n + 1)));
    }
    let chev = chevalley(root, n, sector)?;
    let mut current = number_from_casimir(root, 1, sector)?;
    for k in 3..=target {
        current = match form {
            RecurrenceForm::Shifted => recurrence_step(root, &chev, &current, k as i64, k, k - 1),
            RecurrenceForm::AsPrinted if k < target => recurrence_step(root, &chev, &current, k as i64, k, k - 1),
            RecurrenceForm::AsPrinted => recurrence_step(root, &chev, &current, k as i64 + 1, k + 1, k),
        };
    }
    Ok(current)
}

/// `N_1 + … + N_k`.
pub fn partial_number(root: RootConfig, k: usize, sector: &Sector) -> Result<SparseOperator> {
    check_index(k, sector.modes())?;
    Ok(SparseOperator::diagonal(root, Space::from(sector), |idx| {
        let s = sector.state(idx);
        Laurent::from_integer(root, s[..k].iter().map(|&x| x as i64).sum())
    }))
}
