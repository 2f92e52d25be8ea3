//! Validated run configurations and the batch runner.
//!
//! Levels of one run are independent and evaluated in parallel; results are
//! collected in level order, so output never depends on scheduling.

use std::time::Instant;

use rayon::prelude::*;

use qfock_core::certify::{certify_algebra, certify_embedding, Filter, RelationReport};
use qfock_core::embedding::{embed, IndexMap, Route};
use qfock_core::fock::dimension_formula;
use qfock_core::{RootConfig, Sector};

use crate::json::{route_diff, Bundle, EmbedOutput};
use crate::report::{ConfigJson, LevelTiming, ReportDocument, Timing};
use crate::CliError;

/// Environment variable overriding [`DEFAULT_DIM_CAP`].
pub const DIM_CAP_VAR: &str = "QFOCK_DIM_CAP";

/// Largest sector a run will build. Relation batteries multiply dense-ish
/// operators of this size, so the cap is far below what the core accepts.
pub const DEFAULT_DIM_CAP: usize = 2000;

/// Reads the cap from the environment; unparsable values are a configuration error.
pub fn dimension_cap_from_env() -> Result<usize, CliError> {
    match std::env::var(DIM_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Config(format!("{DIM_CAP_VAR}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_DIM_CAP),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Algebra { n: usize },
    Embedding { k1: usize, k2: usize },
}

impl Target {
    pub fn modes(self) -> usize {
        match self {
            Target::Algebra { n } => n,
            Target::Embedding { k1, k2 } => k1 * k2,
        }
    }

    /// `D` must be a multiple of this.
    pub fn root_step(self) -> u32 {
        match self {
            Target::Algebra { .. } => 2,
            Target::Embedding { k1, k2 } => 2 * (k1 * k2) as u32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub target: Target,
    pub levels: Vec<u32>,
    pub root: RootConfig,
    pub families: Filter,
    pub dim_cap: usize,
}

impl RunConfig {
    /// Checks ranks, the level list, the root and the dimension cap.
    pub fn new(
        target: Target,
        levels: Vec<u32>,
        root: Option<u32>,
        families: Filter,
        dim_cap: usize,
    ) -> Result<Self, CliError> {
        match target {
            Target::Algebra { n } if n < 2 => {
                return Err(CliError::Config(format!("--n must be at least 2, got {n}")));
            }
            Target::Embedding { k1, k2 } if k1 == 0 || k2 == 0 => {
                return Err(CliError::Config(format!("embedding needs k1, k2 >= 1, got {k1}x{k2}")));
            }
            _ => {}
        }
        if levels.is_empty() {
            return Err(CliError::Config("level list is empty".into()));
        }
        let step = target.root_step();
        let d = root.unwrap_or(step);
        if d == 0 || !d.is_multiple_of(step) {
            return Err(CliError::InsufficientRoot { given: d, required: step });
        }
        for &level in &levels {
            check_cap(target.modes(), level, dim_cap)?;
        }
        Ok(RunConfig { target, levels, root: RootConfig::new(d)?, families, dim_cap })
    }

    fn config_json(&self) -> ConfigJson {
        let (check, n, k1, k2) = match self.target {
            Target::Algebra { n } => ("algebra", Some(n), None, None),
            Target::Embedding { k1, k2 } => ("embedding", None, Some(k1), Some(k2)),
        };
        ConfigJson {
            check: check.into(),
            n,
            k1,
            k2,
            levels: self.levels.clone(),
            root: self.root.denominator(),
            families: self.families.to_string(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

pub fn check_cap(modes: usize, level: u32, cap: usize) -> Result<(), CliError> {
    let dim = dimension_formula(modes, level);
    if dim > cap as u128 {
        return Err(CliError::DimensionCap { modes, level, dim, cap });
    }
    Ok(())
}

fn certify_level(config: &RunConfig, level: u32) -> Result<RelationReport, CliError> {
    let sector = Sector::with_cap(config.target.modes(), level, config.dim_cap)?;
    let report = match config.target {
        Target::Algebra { n } => certify_algebra(config.root, n, &sector, &config.families)?,
        Target::Embedding { k1, k2 } => {
            certify_embedding(config.root, IndexMap::new(k1, k2)?, &sector, &config.families)?
        }
    };
    Ok(report)
}

/// Runs every level and assembles one document. `timing = false` omits wall time.
pub fn run_certify(config: &RunConfig, timing: bool) -> Result<ReportDocument, CliError> {
    let start = Instant::now();
    let results: Vec<(u32, Result<RelationReport, CliError>, f64)> = config
        .levels
        .par_iter()
        .map(|&level| {
            let t = Instant::now();
            let r = certify_level(config, level);
            (level, r, t.elapsed().as_secs_f64())
        })
        .collect();
    let mut reports = Vec::with_capacity(results.len());
    let mut per_level = Vec::with_capacity(results.len());
    for (level, report, seconds) in results {
        reports.push((level, report?));
        per_level.push(LevelTiming { level, seconds });
    }
    let timing = timing.then(|| Timing { total_seconds: start.elapsed().as_secs_f64(), levels: per_level });
    Ok(ReportDocument::assemble(config.config_json(), &reports, timing))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteChoice {
    All,
    One(Route),
}

/// Builds the requested routes' bundles; with several routes, the first is the boson route
/// and the others are compared against it.
pub fn run_embed(
    k1: usize,
    k2: usize,
    level: u32,
    routes: RouteChoice,
    root: Option<u32>,
    dim_cap: usize,
) -> Result<EmbedOutput, CliError> {
    let config = RunConfig::new(Target::Embedding { k1, k2 }, vec![level], root, Filter::all(), dim_cap)?;
    let map = IndexMap::new(k1, k2)?;
    let sector = Sector::with_cap(map.modes(), level, dim_cap)?;
    let chosen: Vec<Route> = match routes {
        RouteChoice::All => vec![Route::Boson, Route::Delta, Route::Weyl],
        RouteChoice::One(r) => vec![r],
    };
    let sets = chosen
        .par_iter()
        .map(|&r| embed(r, config.root, map, &sector).map_err(CliError::from))
        .collect::<Result<Vec<_>, _>>()?;
    let (status, differences) = route_diff(&sets);
    Ok(EmbedOutput {
        k1,
        k2,
        level,
        root: config.root.denominator(),
        route_diff: status,
        differences,
        bundles: sets.iter().map(Bundle::from_embedded).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let all = Filter::all;
        assert!(matches!(
            RunConfig::new(Target::Algebra { n: 3 }, vec![99], None, all(), DEFAULT_DIM_CAP),
            Err(CliError::DimensionCap { dim: 5050, .. })
        ));
        assert!(matches!(
            RunConfig::new(Target::Embedding { k1: 3, k2: 2 }, vec![1], Some(6), all(), DEFAULT_DIM_CAP),
            Err(CliError::InsufficientRoot { given: 6, required: 12 })
        ));
        assert!(matches!(
            RunConfig::new(Target::Algebra { n: 3 }, vec![], None, all(), DEFAULT_DIM_CAP),
            Err(CliError::Config(_))
        ));
        let ok = RunConfig::new(Target::Embedding { k1: 3, k2: 2 }, vec![1], None, all(), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(ok.root.denominator(), 12);
    }

    #[test]
    fn routes_agree_for_three_by_two() {
        let out = run_embed(3, 2, 1, RouteChoice::All, None, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(out.route_diff, "identical");
        assert_eq!(out.bundles.len(), 3);
    }

    #[test]
    fn degenerate_embedding_has_empty_x_family() {
        let out = run_embed(1, 4, 1, RouteChoice::One(Route::Boson), None, DEFAULT_DIM_CAP).unwrap();
        let names: Vec<&str> = out.bundles[0].operators.iter().map(|o| o.name.as_str()).collect();
        assert!(names.iter().all(|n| !n.starts_with('X') && !n.starts_with("Hmu")));
        assert!(names.contains(&"Z+(3)"));
    }
}
