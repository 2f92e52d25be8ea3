//! Mutation probes: a checker that cannot be made to fail proves nothing.
//!
//! Each probe adds `1` to one matrix entry of one generator at a time and
//! reruns a single relation group until it reports a failure.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::checks::{check_commuting, check_rll_families};
use super::report::{Filter, RelationResult, Status};
use super::table::{cartan_weyl_families, check_family};
use crate::embedding::{embed_boson_route, IndexMap};
use crate::fock::{Sector, SparseOperator};
use crate::generators::{cartan_weyl, l_functionals, r_matrix, CartanShift, Sign};
use crate::ring::{Laurent, RootConfig};
use crate::{Error, Result};

/// The perturbation that broke a relation, with the failing result.
#[derive(Debug, Clone)]
pub struct Mutation {
    /// Which generator and entry were perturbed, e.g. `Y(1,3) + E(0,2)`.
    pub target: String,
    pub result: RelationResult,
}

fn positions(op: &SparseOperator) -> Vec<(usize, usize)> {
    let rows = op.codomain().dim();
    let cols = op.domain().dim();
    let mut out = Vec::new();
    if rows == 0 || cols == 0 {
        return out;
    }
    if let Some((r, c, _)) = op.first_nonzero() {
        out.push((r, c));
    }
    for p in [(0, cols - 1), (rows - 1, 0), (0, 0), (rows - 1, cols - 1)] {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn bumped(op: &SparseOperator, (r, c): (usize, usize)) -> SparseOperator {
    let mut out = op.clone();
    out.accumulate(r, c, Laurent::one(op.root()));
    out
}

fn failed(results: &[RelationResult]) -> Option<RelationResult> {
    results.iter().find(|r| r.status == Status::Fail).cloned()
}

/// Perturbs the Cartan–Weyl generators until the family `id` fails.
pub fn probe_battery(root: RootConfig, n: usize, sector: &Sector, id: &str) -> Result<Option<Mutation>> {
    let family = cartan_weyl_families()
        .into_iter()
        .find(|f| f.id() == id)
        .ok_or_else(|| Error::InvalidConfig(format!("unknown relation family {id}")))?;
    let base = cartan_weyl(root, n, sector)?;
    let mut targets: Vec<(char, usize, usize)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                targets.push(('Y', i, j));
            }
            if i < j {
                targets.push(('H', i, j));
            }
        }
    }
    for (kind, i, j) in targets {
        let op = if kind == 'Y' { base.y(i, j)?.clone() } else { base.h(i, j)? };
        for pos in positions(&op) {
            let mut gens = base.clone();
            let changed = bumped(&op, pos);
            if kind == 'Y' {
                gens.set_y(i, j, changed);
            } else {
                gens.set_h(i, j, changed);
            }
            // A perturbation that makes a relation unevaluable is not a detection.
            let Ok(result) = check_family(&gens, &family, "") else { continue };
            if result.status == Status::Fail {
                return Ok(Some(Mutation { target: format!("{kind}({i},{j}) + E{pos:?}"), result }));
            }
        }
    }
    Ok(None)
}

/// Perturbs the functionals `l±(i,j)` until the RLL family with suffix `which` (`+-`, `++`, `--`) fails.
pub fn probe_rll(root: RootConfig, n: usize, sector: &Sector, which: &str) -> Result<Option<Mutation>> {
    let base = l_functionals(root, n, sector, CartanShift::Number)?;
    let r = r_matrix(root, n)?;
    let filter = Filter::new([format!("rll.{which}")]);
    for sign in [Sign::Plus, Sign::Minus] {
        for i in 1..=n {
            for j in 1..=n {
                let op = base.get(sign, i, j);
                for pos in positions(op) {
                    let mut l = base.clone();
                    l.set(sign, i, j, bumped(op, pos));
                    if let Some(result) = failed(&check_rll_families(&l, &r, "rll.", &filter)) {
                        return Ok(Some(Mutation { target: format!("l{sign}({i},{j}) + E{pos:?}"), result }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Perturbs the boson-route embedded generators until the commuting group `group`
/// (`XZ`, `XHs`, `HmuZ`, `HmuHs`) fails.
pub fn probe_commuting(map: IndexMap, sector: &Sector, group: &str) -> Result<Option<Mutation>> {
    let root = RootConfig::for_embedding(map.k1(), map.k2())?;
    let base = embed_boson_route(root, map, sector)?;
    let filter = Filter::new([format!("commuting.{group}")]);
    let names: Vec<String> = base.families.named().into_iter().map(|(n, _)| n).collect();
    for (idx, name) in names.iter().enumerate() {
        let op = base.families.named()[idx].1.clone();
        for pos in positions(&op) {
            let mut emb = base.clone();
            let slot = family_slot(&mut emb.families, idx);
            *slot = bumped(&op, pos);
            if let Some(result) = failed(&check_commuting(&emb, "commuting.", &filter)?) {
                return Ok(Some(Mutation { target: format!("{name} + E{pos:?}"), result }));
            }
        }
    }
    Ok(None)
}

/// The `idx`-th member in [`crate::embedding::Families::named`] order.
fn family_slot(f: &mut crate::embedding::Families<SparseOperator>, mut idx: usize) -> &mut SparseOperator {
    for group in [&mut f.x_plus, &mut f.x_minus, &mut f.h_mu, &mut f.z_plus, &mut f.z_minus, &mut f.h_s] {
        if idx < group.len() {
            return &mut group[idx];
        }
        idx -= group.len();
    }
    panic!("family index out of range")
}
