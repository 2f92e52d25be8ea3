//! JSON forms of sectors, operators and named operator bundles.
//!
//! An operator is `{domain, codomain, entries}`; each side lists its tensor
//! factors as `{modes, level}` (level −1 is the empty sector) and each entry is
//! `[row, col, "scalar"]` with the scalar in the core text format. Entries are
//! written in row-major order, so equal operators serialize to equal bytes.

use serde::{Deserialize, Serialize};

use qfock_core::embedding::{EmbeddedSet, Route};
use qfock_core::generators::GeneratorSet;
use qfock_core::ring::parse_scalar;
use qfock_core::{RootConfig, Sector, Space, SparseOperator};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorJson {
    pub modes: usize,
    pub level: i64,
}

impl SectorJson {
    pub fn to_sector(&self, cap: usize) -> Result<Sector, CliError> {
        if self.level < 0 {
            return Ok(Sector::empty(self.modes));
        }
        let level =
            u32::try_from(self.level).map_err(|_| CliError::Config(format!("level {} too large", self.level)))?;
        Ok(Sector::with_cap(self.modes, level, cap)?)
    }
}

fn space_json(space: &Space) -> Vec<SectorJson> {
    space.factors().iter().map(|s| SectorJson { modes: s.modes(), level: s.level() }).collect()
}

fn space_from(json: &[SectorJson], cap: usize) -> Result<Space, CliError> {
    Ok(Space::new(json.iter().map(|s| s.to_sector(cap)).collect::<Result<_, _>>()?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub domain: Vec<SectorJson>,
    pub codomain: Vec<SectorJson>,
    pub entries: Vec<(usize, usize, String)>,
}

impl OperatorJson {
    pub fn from_operator(op: &SparseOperator) -> Self {
        OperatorJson {
            domain: space_json(op.domain()),
            codomain: space_json(op.codomain()),
            entries: op.entries().map(|(r, c, v)| (r, c, v.to_string())).collect(),
        }
    }

    pub fn to_operator(&self, root: RootConfig, cap: usize) -> Result<SparseOperator, CliError> {
        let entries = self
            .entries
            .iter()
            .map(|(r, c, s)| Ok((*r, *c, parse_scalar(s, root)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(SparseOperator::from_entries(
            root,
            space_from(&self.domain, cap)?,
            space_from(&self.codomain, cap)?,
            entries,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedOperator {
    pub name: String,
    pub operator: OperatorJson,
}

/// Named operators of one generator set or one embedding route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    /// `"generators"` or `"embedding"`.
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub route: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k2: Option<usize>,
    pub level: i64,
    pub root: u32,
    pub operators: Vec<NamedOperator>,
}

impl Bundle {
    pub fn from_generators(gens: &GeneratorSet) -> Self {
        let level = gens.space().as_sector().map_or(-1, Sector::level);
        Bundle {
            kind: "generators".into(),
            route: None,
            n: Some(gens.n()),
            k1: None,
            k2: None,
            level,
            root: gens.root().denominator(),
            operators: gens
                .named_operators()
                .into_iter()
                .map(|(name, op)| NamedOperator { name, operator: OperatorJson::from_operator(op) })
                .collect(),
        }
    }

    pub fn from_embedded(set: &EmbeddedSet) -> Self {
        Bundle {
            kind: "embedding".into(),
            route: Some(set.route.name().into()),
            n: None,
            k1: Some(set.map.k1()),
            k2: Some(set.map.k2()),
            level: set.sector.level(),
            root: set.root.denominator(),
            operators: set
                .families
                .named()
                .into_iter()
                .map(|(name, op)| NamedOperator { name, operator: OperatorJson::from_operator(op) })
                .collect(),
        }
    }

    /// Operators by name, parsed back over this bundle's root.
    pub fn operators(&self, cap: usize) -> Result<Vec<(String, SparseOperator)>, CliError> {
        let root = RootConfig::new(self.root)?;
        self.operators.iter().map(|n| Ok((n.name.clone(), n.operator.to_operator(root, cap)?))).collect()
    }
}

/// Output of `qfock embed`: one bundle per route and how the routes compare.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedOutput {
    pub k1: usize,
    pub k2: usize,
    pub level: u32,
    pub root: u32,
    /// `"identical"`, `"different"`, or `"single route"`.
    pub route_diff: String,
    /// Operator names that differ from the boson route, per other route.
    pub differences: Vec<RouteDifference>,
    pub bundles: Vec<Bundle>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteDifference {
    pub route: String,
    pub operators: Vec<String>,
}

pub fn route_diff(sets: &[EmbeddedSet]) -> (String, Vec<RouteDifference>) {
    if sets.len() < 2 {
        return ("single route".into(), Vec::new());
    }
    let base = &sets[0];
    let mut diffs = Vec::new();
    for other in &sets[1..] {
        let names = base.diff(other);
        if !names.is_empty() {
            diffs.push(RouteDifference { route: route_label(other.route, base.route), operators: names });
        }
    }
    let status = if diffs.is_empty() { "identical" } else { "different" };
    (status.into(), diffs)
}

fn route_label(route: Route, against: Route) -> String {
    format!("{} vs {}", route.name(), against.name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use qfock_core::generators::cartan_weyl;

    #[test]
    fn operators_round_trip() {
        let root = RootConfig::HALF;
        let sector = Sector::new(3, 2).unwrap();
        let gens = cartan_weyl(root, 3, &sector).unwrap();
        let bundle = Bundle::from_generators(&gens);
        let text = serde_json::to_string(&bundle).unwrap();
        let back: Bundle = serde_json::from_str(&text).unwrap();
        assert_eq!(back, bundle);
        for ((name, op), (orig_name, orig)) in back.operators(1000).unwrap().iter().zip(gens.named_operators()) {
            assert_eq!(name, &orig_name);
            assert_eq!(op, orig);
        }
    }

    #[test]
    fn empty_sector_round_trips() {
        let root = RootConfig::HALF;
        let vacuum = Sector::new(2, 0).unwrap();
        let a = qfock_core::fock::annihilation(root, 1, &vacuum).unwrap();
        let json = OperatorJson::from_operator(&a);
        assert_eq!(json.codomain, vec![SectorJson { modes: 2, level: -1 }]);
        assert_eq!(json.to_operator(root, 10).unwrap(), a);
    }
}
