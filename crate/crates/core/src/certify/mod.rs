//! Relation tables and the residual engine.
//!
//! Every relation is checked as `lhs − rhs` evaluated to an exact sparse
//! operator; a relation passes iff every residual over its index range is the
//! zero operator. The first nonzero entry seen becomes the witness.
//!
//! The Cartan–Weyl battery is data: see [`cartan_weyl_families`]. Its statements
//! and index predicates are parsed from text, so adding a family is one row.

mod checks;
mod expr;
mod probe;
mod report;
mod table;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

pub use checks::{
    check_algebra_identities, check_cartan_weyl, check_commuting, check_embedded_algebras, check_embedding_identities,
    check_hopf, check_q_boson, check_rll, check_rll_families, coproduct_generators,
};
pub use expr::{Expr, Factor, Predicate, Var, Vars};
pub use probe::{probe_battery, probe_commuting, probe_rll, Mutation};
pub use report::{summarize, Filter, RelationReport, RelationResult, ReportConfig, Status, Summary, Witness};
pub use table::{cartan_weyl_families, check_battery, check_family, RelationFamily};

use crate::embedding::{embed_boson_route, embed_weyl_route, IndexMap, WeylOptions};
use crate::fock::Sector;
use crate::ring::RootConfig;
use crate::{Error, Result};

/// Stated on every report: what a pass does and does not establish.
pub const REPRESENTATION_NOTE: &str = "relations are certified as exact operator identities in the q-boson \
     Fock representation on the listed sector; this is evidence in that representation, not a proof in the \
     abstract algebra";

/// Stated on algebra reports: the componentwise l-functional relations are covered only through RLL.
pub const RLL_COMPONENT_NOTE: &str = "the componentwise commutation relations of the l-functionals are not \
     checked separately; they are the entries of the RLL relations checked here";

fn algebra_config(root: RootConfig, n: usize, sector: &Sector) -> ReportConfig {
    ReportConfig {
        check: "algebra".to_string(),
        n: Some(n),
        k1: None,
        k2: None,
        level: u32::try_from(sector.level().max(0)).unwrap_or(0),
        root: root.denominator(),
    }
}

/// Every relation group for `A_{n−1}^q` on one sector of the `n`-mode Fock space.
pub fn certify_algebra(root: RootConfig, n: usize, sector: &Sector, filter: &Filter) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!("rank needs n >= 2, got {n}")));
    }
    if sector.modes() != n {
        return Err(Error::ModeMismatch { expected: n, found: sector.modes() });
    }
    let mut report = RelationReport::new(algebra_config(root, n, sector));
    report.notes.push(REPRESENTATION_NOTE.to_string());
    report.notes.push(RLL_COMPONENT_NOTE.to_string());
    let plain = |i: usize| i.to_string();
    report.relations.extend(check_q_boson(root, sector, &plain, "qboson.", filter)?);
    if filter.touches("cw.") {
        report.relations.extend(check_cartan_weyl(root, n, sector, filter)?);
    }
    if filter.touches("rll") {
        report.relations.extend(check_rll(root, n, sector, filter)?);
    }
    if filter.touches("id.") || filter.touches("hopf") {
        report.relations.extend(check_algebra_identities(root, n, sector, filter)?);
    }
    Ok(report)
}

/// The commuting-family statements, both embedded batteries and the route
/// identities for `A_{k1−1}^q ⊕ A_{k2−1}^q ⊂ A_{k1k2−1}^q` on one flat sector.
///
/// `root` must be a multiple of `2·k1·k2` (see [`RootConfig::for_embedding`]).
pub fn certify_embedding(root: RootConfig, map: IndexMap, sector: &Sector, filter: &Filter) -> Result<RelationReport> {
    let mut report = RelationReport::new(ReportConfig {
        check: "embedding".to_string(),
        n: Some(map.modes()),
        k1: Some(map.k1()),
        k2: Some(map.k2()),
        level: u32::try_from(sector.level().max(0)).unwrap_or(0),
        root: root.denominator(),
    });
    report.notes.push(REPRESENTATION_NOTE.to_string());
    report.notes.push(
        "commuting.* checks use the boson-route generators; embedded.* checks use the Weyl-route generators, whose \
         non-adjacent members are synthesized through the first Borel relations"
            .to_string(),
    );
    if filter.touches("commuting.") {
        let boson = embed_boson_route(root, map, sector)?;
        report.relations.extend(check_commuting(&boson, "commuting.", filter)?);
    }
    if filter.touches("embedded.") {
        let weyl = embed_weyl_route(root, map, sector, WeylOptions::default())?;
        let (relations, notes) = check_embedded_algebras(&weyl, "embedded.", filter)?;
        report.relations.extend(relations);
        report.notes.extend(notes);
    }
    if filter.touches("embed.") {
        report.relations.extend(check_embedding_identities(root, map, sector, filter)?);
    }
    Ok(report)
}

/// Number of admissible index tuples per Cartan–Weyl family at rank `n`.
pub fn coverage(n: usize) -> Vec<(String, usize)> {
    cartan_weyl_families().iter().map(|f| (f.id().to_string(), f.admissible(n).len())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_report_passes_at_small_rank() {
        let root = RootConfig::HALF;
        let sector = Sector::new(4, 1).unwrap();
        let report = certify_algebra(root, 4, &sector, &Filter::all()).unwrap();
        let s = report.summary();
        assert_eq!(s.failed, 0, "{report}");
        let flagged: Vec<&str> =
            report.relations.iter().filter(|r| r.status == Status::Flagged).map(|r| r.id.as_str()).collect();
        assert!(flagged.contains(&"cw.B+5") && flagged.contains(&"cw.M9"));
        assert!(flagged.contains(&"rll.det.number"));
        assert!(flagged.contains(&"hopf.antipode.printed"));
        assert!(flagged.contains(&"id.recurrence.printed"));
        let vacuous = certify_algebra(root, 3, &Sector::new(3, 1).unwrap(), &Filter::new(["cw.B+5"])).unwrap();
        assert_eq!(vacuous.relations[0].status, Status::Pass);
        assert_eq!(vacuous.relations[0].indices_checked, 0);
        assert_eq!(report.find("rll.det.centered").unwrap().status, Status::Pass);
        assert_eq!(report.find("hopf.antipode").unwrap().status, Status::Pass);
    }

    #[test]
    fn embedding_report_passes_for_two_by_two() {
        let map = IndexMap::new(2, 2).unwrap();
        // The printed dressing exponent first deviates at level 2.
        let sector = Sector::new(4, 2).unwrap();
        let root = RootConfig::for_embedding(2, 2).unwrap();
        let report = certify_embedding(root, map, &sector, &Filter::all()).unwrap();
        assert_eq!(report.summary().failed, 0, "{report}");
        assert_eq!(report.find("commuting.XZ").unwrap().indices_checked, 4);
        assert_eq!(report.find("embed.route.weyl-printed").unwrap().status, Status::Flagged);
    }

    #[test]
    fn filter_restricts_work() {
        let root = RootConfig::HALF;
        let sector = Sector::new(3, 2).unwrap();
        let report = certify_algebra(root, 3, &sector, &Filter::new(["cw.B+1", "rll.+-"])).unwrap();
        let ids: Vec<&str> = report.relations.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["cw.B+1", "rll.+-"]);
    }

    #[test]
    fn probes_find_failures() {
        let root = RootConfig::HALF;
        let sector = Sector::new(3, 1).unwrap();
        for id in ["B+1", "B-1", "M0", "W+"] {
            let m = probe_battery(root, 3, &sector, id).unwrap().unwrap_or_else(|| panic!("{id} not falsifiable"));
            assert!(m.result.witness.is_some());
        }
        for which in ["+-", "++", "--"] {
            assert!(probe_rll(root, 3, &sector, which).unwrap().is_some(), "{which}");
        }
        let map = IndexMap::new(2, 2).unwrap();
        let sector = Sector::new(4, 1).unwrap();
        assert!(probe_commuting(map, &sector, "XZ").unwrap().is_some());
    }
}
