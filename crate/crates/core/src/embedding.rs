//! `A_{k1-1}^q ⊕ A_{k2-1}^q ⊂ A_{k1k2-1}^q` on the `k1·k2`-mode Fock space.
//!
//! Flat mode `i` is grid cell `(μ, s)` with `i = (μ−1)k2 + s`. The embedded
//! Chevalley generators are built three independent ways and must agree
//! entry by entry:
//!
//! * boson route: sums of grid hops dressed by `q^(½Σ sign(σ−s)(…))`;
//! * delta route: iterated coproducts of the small-rank generators evaluated
//!   on tensor legs, then relabeled onto the flat sector;
//! * Weyl route: Cartan–Weyl generators of the big algebra dressed by
//!   Cartan exponentials and the `Λ` shifts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;

use crate::fock::{self, RationalOperator, Sector, Space, SparseOperator};
use crate::generators::{cartan_weyl, diagonal_values, q_diagonal, ChevalleySet, GeneratorSet, Sign};
use crate::hopf::Algebra;
use crate::ring::{Laurent, RootConfig};
use crate::{Error, Result};

/// The bijection `i ↔ (μ, s)` between `1..=k1k2` and `1..=k1 × 1..=k2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexMap {
    k1: usize,
    k2: usize,
}

impl IndexMap {
    pub fn new(k1: usize, k2: usize) -> Result<IndexMap> {
        if k1 == 0 || k2 == 0 {
            return Err(Error::InvalidConfig(format!("grid {k1}x{k2} has no cells")));
        }
        Ok(IndexMap { k1, k2 })
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }

    pub fn modes(&self) -> usize {
        self.k1 * self.k2
    }

    /// `μ = 1 + ⌊(i−1)/k2⌋`, `s = 1 + (i−1) mod k2`.
    pub fn to_grid(&self, i: usize) -> Result<(usize, usize)> {
        if i == 0 || i > self.modes() {
            return Err(Error::IndexOutOfRange { index: i, bound: self.modes() });
        }
        Ok((1 + (i - 1) / self.k2, 1 + (i - 1) % self.k2))
    }

    /// `i = (μ−1)k2 + s`.
    pub fn to_flat(&self, mu: usize, s: usize) -> Result<usize> {
        if mu == 0 || mu > self.k1 {
            return Err(Error::IndexOutOfRange { index: mu, bound: self.k1 });
        }
        if s == 0 || s > self.k2 {
            return Err(Error::IndexOutOfRange { index: s, bound: self.k2 });
        }
        Ok(self.flat(mu, s))
    }

    fn flat(&self, mu: usize, s: usize) -> usize {
        (mu - 1) * self.k2 + s
    }
}

pub fn index_to_grid(i: usize, k1: usize, k2: usize) -> Result<(usize, usize)> {
    IndexMap::new(k1, k2)?.to_grid(i)
}

pub fn grid_to_index(mu: usize, s: usize, k1: usize, k2: usize) -> Result<usize> {
    IndexMap::new(k1, k2)?.to_flat(mu, s)
}

/// Which construction produced an [`EmbeddedSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Boson,
    Delta,
    Weyl,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Boson => "boson",
            Route::Delta => "delta",
            Route::Weyl => "weyl",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `Λ_t^±` shift used by the Weyl route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LambdaForm {
    /// `Λ_t^± = ±[(k2−1)/(k1k2)(N + Σ_{σ≥2} H_{1σ}) − Σ_{σ=t−k2+1}^{t−1} H_{1σ}]`,
    /// which reproduces the boson route.
    #[default]
    Corrected,
    /// `Λ_t^± = (k2−1)/(k1k2)(N + Σ_{σ≥2} H_{1σ}) ± Σ_{σ=t−k2+1}^{t−1} H_{1σ}`.
    Verbatim,
}

/// How the total number `N` inside `Λ` is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TotalNumber {
    /// `m·1` on a level-`m` sector.
    #[default]
    Scalar,
    /// The diagonal operator `Σ N_i`.
    Operator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WeylOptions {
    pub lambda: LambdaForm,
    pub total_number: TotalNumber,
}

/// Members paired with their display names.
pub type NamedMembers<'a, T> = Vec<(String, &'a T)>;

/// Generic container for the two embedded Chevalley families.
#[derive(Clone, Debug, PartialEq)]
pub struct Families<T> {
    /// `X̃_μ^+`, `μ = 1..k1−1`.
    pub x_plus: Vec<T>,
    pub x_minus: Vec<T>,
    /// `H̃_μ`.
    pub h_mu: Vec<T>,
    /// `Z̃^(+s)`, `s = 1..k2−1`.
    pub z_plus: Vec<T>,
    pub z_minus: Vec<T>,
    /// `H̃^s`.
    pub h_s: Vec<T>,
}

impl<T> Families<T> {
    fn empty() -> Self {
        Families {
            x_plus: Vec::new(),
            x_minus: Vec::new(),
            h_mu: Vec::new(),
            z_plus: Vec::new(),
            z_minus: Vec::new(),
            h_s: Vec::new(),
        }
    }

    /// Members by display name: `X+(μ)`, `X-(μ)`, `Hmu(μ)`, `Z+(s)`, `Z-(s)`, `Hs(s)`.
    pub fn named(&self) -> Vec<(String, &T)> {
        let mut out = Vec::new();
        let groups: [(&str, &Vec<T>); 6] = [
            ("X+", &self.x_plus),
            ("X-", &self.x_minus),
            ("Hmu", &self.h_mu),
            ("Z+", &self.z_plus),
            ("Z-", &self.z_minus),
            ("Hs", &self.h_s),
        ];
        for (label, ops) in groups {
            for (k, op) in ops.iter().enumerate() {
                out.push((format!("{label}({})", k + 1), op));
            }
        }
        out
    }

    /// The `X̃, H̃_μ` members followed by the `Z̃, H̃^s` members.
    pub fn split(&self) -> (NamedMembers<'_, T>, NamedMembers<'_, T>) {
        self.named().into_iter().partition(|(name, _)| name.starts_with('X') || name.starts_with("Hmu"))
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Families<U> {
        Families {
            x_plus: self.x_plus.iter().map(&mut f).collect(),
            x_minus: self.x_minus.iter().map(&mut f).collect(),
            h_mu: self.h_mu.iter().map(&mut f).collect(),
            z_plus: self.z_plus.iter().map(&mut f).collect(),
            z_minus: self.z_minus.iter().map(&mut f).collect(),
            h_s: self.h_s.iter().map(&mut f).collect(),
        }
    }
}

/// Names of members that differ between two family sets (length mismatches included).
pub fn family_diff<T: PartialEq>(a: &Families<T>, b: &Families<T>) -> Vec<String> {
    let left = a.named();
    let right = b.named();
    let mut out = Vec::new();
    let right_map: BTreeMap<&str, &T> = right.iter().map(|(n, o)| (n.as_str(), *o)).collect();
    for (name, op) in &left {
        if right_map.get(name.as_str()).is_none_or(|other| *other != *op) {
            out.push(name.clone());
        }
    }
    for (name, _) in &right {
        if !left.iter().any(|(n, _)| n == name) {
            out.push(name.clone());
        }
    }
    out
}

/// The embedded generators on one flat sector, tagged with their route.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedSet {
    pub route: Route,
    pub map: IndexMap,
    pub sector: Sector,
    pub root: RootConfig,
    pub families: Families<SparseOperator>,
}

impl EmbeddedSet {
    pub fn x(&self, mu: usize, sign: Sign) -> Option<&SparseOperator> {
        let v = match sign {
            Sign::Plus => &self.families.x_plus,
            Sign::Minus => &self.families.x_minus,
        };
        mu.checked_sub(1).and_then(|k| v.get(k))
    }

    pub fn z(&self, s: usize, sign: Sign) -> Option<&SparseOperator> {
        let v = match sign {
            Sign::Plus => &self.families.z_plus,
            Sign::Minus => &self.families.z_minus,
        };
        s.checked_sub(1).and_then(|k| v.get(k))
    }

    /// `X̃_μ^±, H̃_μ` as Chevalley generators of `A_{k1−1}^q`.
    pub fn x_family(&self) -> ChevalleySet {
        ChevalleySet {
            n: self.map.k1,
            cartan: self.families.h_mu.clone(),
            raising: self.families.x_plus.clone(),
            lowering: self.families.x_minus.clone(),
        }
    }

    /// `Z̃^(±s), H̃^s` as Chevalley generators of `A_{k2−1}^q`.
    pub fn z_family(&self) -> ChevalleySet {
        ChevalleySet {
            n: self.map.k2,
            cartan: self.families.h_s.clone(),
            raising: self.families.z_plus.clone(),
            lowering: self.families.z_minus.clone(),
        }
    }

    /// The full Cartan–Weyl set of one family, non-adjacent members synthesized
    /// through the first Borel relations. `None` for a rank-zero family.
    pub fn x_generators(&self) -> Result<Option<GeneratorSet>> {
        synthesize(&self.x_family())
    }

    pub fn z_generators(&self) -> Result<Option<GeneratorSet>> {
        synthesize(&self.z_family())
    }

    /// Names of members that differ from `other`.
    pub fn diff(&self, other: &EmbeddedSet) -> Vec<String> {
        family_diff(&self.families, &other.families)
    }

    /// Every entry evaluated at `q = 1`.
    pub fn classical_limit(&self) -> ClassicalSet {
        ClassicalSet {
            map: self.map,
            sector: self.sector.clone(),
            families: self.families.map(SparseOperator::classical),
        }
    }
}

fn synthesize(set: &ChevalleySet) -> Result<Option<GeneratorSet>> {
    if set.n < 2 {
        return Ok(None);
    }
    GeneratorSet::from_chevalley(set).map(Some)
}

/// Embedded generators over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalSet {
    pub map: IndexMap,
    pub sector: Sector,
    pub families: Families<RationalOperator>,
}

fn check_sector(map: &IndexMap, sector: &Sector) -> Result<()> {
    if sector.modes() != map.modes() {
        return Err(Error::ModeMismatch { expected: map.modes(), found: sector.modes() });
    }
    Ok(())
}

fn signum(x: i64) -> i64 {
    x.signum()
}

/// The direct q-boson construction on the flat sector.
pub fn embed_boson_route(root: RootConfig, map: IndexMap, sector: &Sector) -> Result<EmbeddedSet> {
    check_sector(&map, sector)?;
    let (k1, k2) = (map.k1, map.k2);
    let f = |mu: usize, s: usize| map.flat(mu, s);
    let occ = |st: &[u32], i: usize| st[i - 1] as i64;
    let space = Space::from(sector);
    let mut fam = Families::empty();
    for mu in 1..k1 {
        for sign in [Sign::Plus, Sign::Minus] {
            let mut total = SparseOperator::zero(root, space.clone(), space.clone());
            for s in 1..=k2 {
                let dressing = q_diagonal(root, sector, |st| {
                    let e: i64 = (1..=k2)
                        .filter(|&sig| sig != s)
                        .map(|sig| signum(sig as i64 - s as i64) * (occ(st, f(mu, sig)) - occ(st, f(mu + 1, sig))))
                        .sum();
                    Ratio::new(e, 2)
                })?;
                let hop = match sign {
                    Sign::Plus => fock::hop(root, f(mu, s), f(mu + 1, s), sector)?,
                    Sign::Minus => fock::hop(root, f(mu + 1, s), f(mu, s), sector)?,
                };
                total = &total + &(&hop * &dressing);
            }
            match sign {
                Sign::Plus => fam.x_plus.push(total),
                Sign::Minus => fam.x_minus.push(total),
            }
        }
        fam.h_mu.push(SparseOperator::diagonal(root, space.clone(), |k| {
            let st = sector.state(k);
            Laurent::from_integer(root, (1..=k2).map(|s| occ(st, f(mu, s)) - occ(st, f(mu + 1, s))).sum())
        }));
    }
    for s in 1..k2 {
        for sign in [Sign::Plus, Sign::Minus] {
            let mut total = SparseOperator::zero(root, space.clone(), space.clone());
            for mu in 1..=k1 {
                let dressing = q_diagonal(root, sector, |st| {
                    let e: i64 = (1..=k1)
                        .filter(|&sig| sig != mu)
                        .map(|sig| signum(sig as i64 - mu as i64) * (occ(st, f(sig, s)) - occ(st, f(sig, s + 1))))
                        .sum();
                    Ratio::new(e, 2)
                })?;
                let hop = match sign {
                    Sign::Plus => fock::hop(root, f(mu, s), f(mu, s + 1), sector)?,
                    Sign::Minus => fock::hop(root, f(mu, s + 1), f(mu, s), sector)?,
                };
                total = &total + &(&hop * &dressing);
            }
            match sign {
                Sign::Plus => fam.z_plus.push(total),
                Sign::Minus => fam.z_minus.push(total),
            }
        }
        fam.h_s.push(SparseOperator::diagonal(root, space.clone(), |k| {
            let st = sector.state(k);
            Laurent::from_integer(root, (1..=k1).map(|mu| occ(st, f(mu, s)) - occ(st, f(mu, s + 1))).sum())
        }));
    }
    Ok(EmbeddedSet { route: Route::Boson, map, sector: sector.clone(), root, families: fam })
}

/// All compositions of `total` into `parts` non-negative integers, lexicographic.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Tensor legs of the flat space: `legs` factors, each with `leg_modes` modes.
/// `flat_of(leg, mode)` is the flat mode index (1-based) of that leg's mode.
struct LegLayout<F: Fn(usize, usize) -> usize> {
    legs: usize,
    leg_modes: usize,
    flat_of: F,
}

impl<F: Fn(usize, usize) -> usize> LegLayout<F> {
    /// Evaluates `x` on every leg-level composition of the sector level and
    /// relabels the blocks onto the flat sector.
    fn transport(&self, x: &crate::hopf::FormalElement, sector: &Sector) -> Result<SparseOperator> {
        let root = x.algebra().root();
        let space = Space::from(sector);
        let mut out = SparseOperator::zero(root, space.clone(), space);
        if sector.level() < 0 {
            return Ok(out);
        }
        let level = u32::try_from(sector.level()).map_err(|_| Error::InvalidConfig("level too large".into()))?;
        for levels in compositions(level, self.legs) {
            let legs: Vec<Sector> = levels
                .iter()
                .map(|&m| Sector::with_cap(self.leg_modes, m, usize::MAX).map_err(Error::from))
                .collect::<Result<_>>()?;
            let block = x.evaluate(&legs)?;
            let product = block.domain().clone();
            let to_flat = |index: usize| -> usize {
                let parts = product.split_index(index);
                let mut occupation = vec![0u32; sector.modes()];
                for (leg, &p) in parts.iter().enumerate() {
                    for (mode, &count) in legs[leg].state(p).iter().enumerate() {
                        occupation[(self.flat_of)(leg + 1, mode + 1) - 1] = count;
                    }
                }
                sector.index_of(&occupation).expect("leg states recombine into the flat sector")
            };
            out.accumulate_block(&block, to_flat, to_flat);
        }
        Ok(out)
    }
}

/// The iterated-coproduct construction, relabeled onto the flat sector.
///
/// `X̃` lives on `k2` legs of `k1` modes (leg `s` carries grid column `s`);
/// `Z̃` lives on `k1` legs of `k2` modes (leg `μ` carries grid row `μ`).
pub fn embed_delta_route(root: RootConfig, map: IndexMap, sector: &Sector) -> Result<EmbeddedSet> {
    check_sector(&map, sector)?;
    let (k1, k2) = (map.k1, map.k2);
    let mut fam = Families::empty();
    let columns = LegLayout { legs: k2, leg_modes: k1, flat_of: |s: usize, mu: usize| map.flat(mu, s) };
    let big = Algebra::new(root, k1)?;
    for mu in 1..k1 {
        fam.x_plus.push(columns.transport(&big.y(mu, mu + 1)?.delta_power(k2 - 1)?, sector)?);
        fam.x_minus.push(columns.transport(&big.y(mu + 1, mu)?.delta_power(k2 - 1)?, sector)?);
        fam.h_mu.push(columns.transport(&big.h(mu, mu + 1)?.delta_power(k2 - 1)?, sector)?);
    }
    let rows = LegLayout { legs: k1, leg_modes: k2, flat_of: |mu: usize, s: usize| map.flat(mu, s) };
    let small = Algebra::new(root, k2)?;
    for s in 1..k2 {
        fam.z_plus.push(rows.transport(&small.y(s, s + 1)?.delta_power(k1 - 1)?, sector)?);
        fam.z_minus.push(rows.transport(&small.y(s + 1, s)?.delta_power(k1 - 1)?, sector)?);
        fam.h_s.push(rows.transport(&small.h(s, s + 1)?.delta_power(k1 - 1)?, sector)?);
    }
    Ok(EmbeddedSet { route: Route::Delta, map, sector: sector.clone(), root, families: fam })
}

/// The construction from Cartan–Weyl generators of `A_{k1k2−1}^q`.
pub fn embed_weyl_route(root: RootConfig, map: IndexMap, sector: &Sector, options: WeylOptions) -> Result<EmbeddedSet> {
    check_sector(&map, sector)?;
    let (k1, k2) = (map.k1, map.k2);
    let n = map.modes();
    let needed = 2 * (k1 * k2) as u32;
    if !root.denominator().is_multiple_of(needed) {
        return Err(Error::InvalidConfig(format!(
            "root denominator {} is not a multiple of 2·k1·k2 = {needed}",
            root.denominator()
        )));
    }
    let f = |mu: usize, s: usize| map.flat(mu, s);
    let gens = cartan_weyl(root, n, sector)?;
    let space = gens.space().clone();
    // eigenvalues of H_ij, cached per pair
    let mut cache: BTreeMap<(usize, usize), Vec<Ratio<i64>>> = BTreeMap::new();
    let mut h = |i: usize, j: usize| -> Result<Vec<Ratio<i64>>> {
        if let Some(v) = cache.get(&(i, j)) {
            return Ok(v.clone());
        }
        let v = diagonal_values(&gens.h(i, j)?)?;
        cache.insert((i, j), v.clone());
        Ok(v)
    };
    let total: Vec<Ratio<i64>> = match options.total_number {
        TotalNumber::Scalar => vec![Ratio::from_integer(sector.level().max(0)); sector.dim()],
        TotalNumber::Operator => diagonal_values(&fock::total_number(root, sector))?,
    };
    let dim = sector.dim();
    let diag = |values: &[Ratio<i64>]| -> Result<SparseOperator> {
        let mut k = 0;
        q_diagonal(root, sector, |_| {
            let v = values[k];
            k += 1;
            v
        })
    };
    let mut fam = Families::empty();
    for s in 1..k2 {
        for sign in [Sign::Plus, Sign::Minus] {
            let mut acc = SparseOperator::zero(root, space.clone(), space.clone());
            for mu in 1..=k1 {
                let i = f(mu, s);
                let mut exponent = vec![Ratio::zero(); dim];
                for sig in (1..=k1).filter(|&sig| sig != mu) {
                    let hv = h(f(sig, s), f(sig, s) + 1)?;
                    for (e, v) in exponent.iter_mut().zip(&hv) {
                        *e += Ratio::new(signum(sig as i64 - mu as i64), 2) * v;
                    }
                }
                let y = match sign {
                    Sign::Plus => gens.y(i, i + 1)?,
                    Sign::Minus => gens.y(i + 1, i)?,
                };
                acc = &acc + &(y * &diag(&exponent)?);
            }
            match sign {
                Sign::Plus => fam.z_plus.push(acc),
                Sign::Minus => fam.z_minus.push(acc),
            }
        }
        let mut hs = SparseOperator::zero(root, space.clone(), space.clone());
        for mu in 1..=k1 {
            hs = &hs + &gens.h(f(mu, s), f(mu, s) + 1)?;
        }
        fam.h_s.push(hs);
    }
    // Σ_{σ=2}^{n} H_{1σ}, shared by every Λ
    let mut base = total.clone();
    for sigma in 2..=n {
        for (b, v) in base.iter_mut().zip(&h(1, sigma)?) {
            *b += v;
        }
    }
    let weight = Ratio::new(k2 as i64 - 1, (k1 * k2) as i64);
    for mu in 1..k1 {
        let range = mu * k2 + 1..=(mu + 1) * k2;
        for sign in [Sign::Plus, Sign::Minus] {
            let sv = sign.value();
            let mut acc = SparseOperator::zero(root, space.clone(), space.clone());
            for t in range.clone() {
                let mut exponent = vec![Ratio::zero(); dim];
                for nu in range.clone().filter(|&nu| nu != t) {
                    let hv = h(nu - k2, nu)?;
                    for (e, v) in exponent.iter_mut().zip(&hv) {
                        *e += Ratio::new(signum(nu as i64 - t as i64), 2) * v;
                    }
                }
                let mut tail = vec![Ratio::zero(); dim];
                for sigma in t - k2 + 1..t {
                    for (acc_t, v) in tail.iter_mut().zip(&h(1, sigma)?) {
                        *acc_t += v;
                    }
                }
                for k in 0..dim {
                    let lead = weight * base[k];
                    exponent[k] += match options.lambda {
                        LambdaForm::Corrected => (lead - tail[k]) * sv,
                        LambdaForm::Verbatim => lead + tail[k] * sv,
                    };
                }
                let y = match sign {
                    Sign::Plus => gens.y(t - k2, t)?,
                    Sign::Minus => gens.y(t, t - k2)?,
                };
                acc = &acc + &(y * &diag(&exponent)?);
            }
            match sign {
                Sign::Plus => fam.x_plus.push(acc),
                Sign::Minus => fam.x_minus.push(acc),
            }
        }
        let mut hm = SparseOperator::zero(root, space.clone(), space.clone());
        for p in (mu - 1) * k2 + 1..=mu * k2 {
            hm = &hm + &gens.h(p, p + k2)?;
        }
        fam.h_mu.push(hm);
    }
    Ok(EmbeddedSet { route: Route::Weyl, map, sector: sector.clone(), root, families: fam })
}

/// `a_i^+ a_j^-` at `q = 1`, assembled directly from occupation arithmetic.
fn classical_hop(sector: &Sector, i: usize, j: usize) -> RationalOperator {
    let space = Space::from(sector);
    let mut out = RationalOperator::zero((), space.clone(), space);
    for (col, st) in sector.basis().iter().enumerate() {
        let mj = st[j - 1];
        if mj == 0 {
            continue;
        }
        let mut target = st.to_vec();
        target[j - 1] -= 1;
        target[i - 1] += 1;
        let row = sector.index_of(&target).expect("hop stays in the sector");
        out.accumulate(row, col, BigRational::from_integer(BigInt::from(mj)));
    }
    out
}

fn classical_cartan(sector: &Sector, pairs: &[(usize, usize)]) -> RationalOperator {
    RationalOperator::diagonal((), Space::from(sector), |k| {
        let st = sector.state(k);
        let v: i64 = pairs.iter().map(|&(i, j)| st[i - 1] as i64 - st[j - 1] as i64).sum();
        BigRational::from_integer(BigInt::from(v))
    })
}

/// The `q → 1` embedding formulas, built over the rationals without the Laurent kernel:
/// `X̃_μ^+ = Σ_s Y^+_{(μ−1)k2+s, μk2+s}`, `Z̃^(±s) = Σ_μ Y^±_{(μ−1)k2+s}`,
/// `H̃_μ = Σ_p H_{p,p+k2}`, `H̃^s = Σ_μ H_{(μ−1)k2+s}`.
pub fn classical_display(map: IndexMap, sector: &Sector) -> Result<ClassicalSet> {
    check_sector(&map, sector)?;
    let (k1, k2) = (map.k1, map.k2);
    let f = |mu: usize, s: usize| map.flat(mu, s);
    let sum = |ops: Vec<RationalOperator>| {
        let space = Space::from(sector);
        ops.into_iter().fold(RationalOperator::zero((), space.clone(), space), |a, b| &a + &b)
    };
    let mut fam = Families::empty();
    for mu in 1..k1 {
        fam.x_plus.push(sum((1..=k2).map(|s| classical_hop(sector, f(mu, s), f(mu + 1, s))).collect()));
        fam.x_minus.push(sum((1..=k2).map(|s| classical_hop(sector, f(mu + 1, s), f(mu, s))).collect()));
        let pairs: Vec<_> = ((mu - 1) * k2 + 1..=mu * k2).map(|p| (p, p + k2)).collect();
        fam.h_mu.push(classical_cartan(sector, &pairs));
    }
    for s in 1..k2 {
        fam.z_plus.push(sum((1..=k1).map(|mu| classical_hop(sector, f(mu, s), f(mu, s) + 1)).collect()));
        fam.z_minus.push(sum((1..=k1).map(|mu| classical_hop(sector, f(mu, s) + 1, f(mu, s))).collect()));
        let pairs: Vec<_> = (1..=k1).map(|mu| (f(mu, s), f(mu, s) + 1)).collect();
        fam.h_s.push(classical_cartan(sector, &pairs));
    }
    Ok(ClassicalSet { map, sector: sector.clone(), families: fam })
}

/// Builds the requested route; the Weyl route uses default options.
pub fn embed(route: Route, root: RootConfig, map: IndexMap, sector: &Sector) -> Result<EmbeddedSet> {
    match route {
        Route::Boson => embed_boson_route(root, map, sector),
        Route::Delta => embed_delta_route(root, map, sector),
        Route::Weyl => embed_weyl_route(root, map, sector, WeylOptions::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(k1: usize, k2: usize, m: u32) -> (RootConfig, IndexMap, Sector) {
        let root = RootConfig::for_embedding(k1, k2).unwrap();
        (root, IndexMap::new(k1, k2).unwrap(), Sector::new(k1 * k2, m).unwrap())
    }

    #[test]
    fn index_map_examples() {
        assert_eq!(index_to_grid(1, 3, 2).unwrap(), (1, 1));
        assert_eq!(index_to_grid(5, 3, 2).unwrap(), (3, 1));
        assert_eq!(grid_to_index(2, 2, 2, 2).unwrap(), 4);
        assert_eq!(index_to_grid(4, 2, 2).unwrap(), (2, 2));
        assert!(index_to_grid(7, 3, 2).is_err());
        assert!(grid_to_index(1, 3, 3, 2).is_err());
        for k1 in 1..=6 {
            for k2 in 1..=6 {
                let map = IndexMap::new(k1, k2).unwrap();
                for i in 1..=k1 * k2 {
                    let (mu, s) = map.to_grid(i).unwrap();
                    assert_eq!(map.to_flat(mu, s).unwrap(), i);
                }
            }
        }
    }

    #[test]
    fn boson_route_commutes_at_2x2() {
        let (root, map, sector) = setup(2, 2, 1);
        let set = embed_boson_route(root, map, &sector).unwrap();
        assert_eq!(sector.dim(), 4);
        let x = set.x(1, Sign::Plus).unwrap();
        let z = set.z(1, Sign::Minus).unwrap();
        assert!(SparseOperator::commutator(x, z).unwrap().is_zero());
        assert!(set.families.h_mu[0].is_diagonal() && set.families.h_s[0].is_diagonal());
        let display = classical_display(map, &sector).unwrap();
        assert_eq!(set.classical_limit().families.x_plus[0], display.families.x_plus[0]);
    }

    #[test]
    fn routes_agree() {
        for (k1, k2) in [(2, 2), (3, 2), (2, 3)] {
            for m in 0..=2 {
                let (root, map, sector) = setup(k1, k2, m);
                let boson = embed_boson_route(root, map, &sector).unwrap();
                let delta = embed_delta_route(root, map, &sector).unwrap();
                let weyl = embed_weyl_route(root, map, &sector, WeylOptions::default()).unwrap();
                assert!(boson.diff(&delta).is_empty(), "{k1}x{k2} m={m}: {:?}", boson.diff(&delta));
                assert!(boson.diff(&weyl).is_empty(), "{k1}x{k2} m={m}: {:?}", boson.diff(&weyl));
                let carried = WeylOptions { total_number: TotalNumber::Operator, ..WeylOptions::default() };
                assert!(weyl.diff(&embed_weyl_route(root, map, &sector, carried).unwrap()).is_empty());
            }
        }
    }

    #[test]
    fn verbatim_lambda_deviates_at_level_two() {
        let (root, map, sector) = setup(3, 2, 2);
        let boson = embed_boson_route(root, map, &sector).unwrap();
        let options = WeylOptions { lambda: LambdaForm::Verbatim, ..WeylOptions::default() };
        let verbatim = embed_weyl_route(root, map, &sector, options).unwrap();
        assert!(!boson.diff(&verbatim).is_empty());
        assert!(boson.diff(&verbatim).iter().all(|name| name.starts_with('X')));
    }

    #[test]
    fn degenerate_and_vacuum() {
        let (root, map, sector) = setup(1, 4, 1);
        let set = embed_delta_route(root, map, &sector).unwrap();
        assert!(set.families.x_plus.is_empty() && set.families.h_mu.is_empty());
        assert_eq!(set.families.z_plus.len(), 3);
        assert!(set.diff(&embed_boson_route(root, map, &sector).unwrap()).is_empty());
        let (root, map, sector) = setup(3, 1, 2);
        let boson = embed_boson_route(root, map, &sector).unwrap();
        let delta = embed_delta_route(root, map, &sector).unwrap();
        assert!(boson.diff(&delta).is_empty());
        let native = crate::generators::chevalley(root, 3, &sector).unwrap();
        assert_eq!(boson.families.x_plus, native.raising);
        let (root, map, sector) = setup(2, 2, 0);
        let weyl = embed_weyl_route(root, map, &sector, WeylOptions::default()).unwrap();
        assert!(weyl
            .families
            .x_plus
            .iter()
            .chain(&weyl.families.z_minus)
            .all(|op| op.is_zero() && op.domain().dim() == 1));
    }

    #[test]
    fn weyl_route_needs_a_fine_root() {
        let (_, map, sector) = setup(2, 2, 1);
        assert!(matches!(
            embed_weyl_route(RootConfig::HALF, map, &sector, WeylOptions::default()),
            Err(Error::InvalidConfig(_))
        ));
        let wrong = Sector::new(3, 1).unwrap();
        assert!(matches!(embed_boson_route(RootConfig::HALF, map, &wrong), Err(Error::ModeMismatch { .. })));
    }

    #[test]
    fn classical_su2_pair() {
        let (root, map, sector) = setup(2, 2, 1);
        let set = embed_weyl_route(root, map, &sector, WeylOptions::default()).unwrap().classical_limit();
        let fam = &set.families;
        let comm = &(&fam.x_plus[0] * &fam.x_minus[0]) - &(&fam.x_minus[0] * &fam.x_plus[0]);
        assert_eq!(comm, fam.h_mu[0]);
        assert_eq!(set, classical_display(map, &sector).unwrap());
    }
}
