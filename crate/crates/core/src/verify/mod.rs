//! Verification suites: the two comparison tables, the D8 counterexamples,
//! inclusions between collections, and the local conditions.

mod context;
mod counterexamples;
mod emit;
mod inclusions;
mod report;
mod steps;
mod tables;

pub use context::Context;
pub use counterexamples::{d8_shape, D8Shape};
pub use emit::{to_json, to_markdown};
pub use report::{
    CollectionHomology, CounterexampleCheck, EdgeResult, EdgeStatus, EqualityResult,
    InclusionResult, Report, Row, Style, Suite, Summary, SCHEMA_VERSION,
};
pub use steps::StepRecord;
pub use tables::{HAT_TABLE, TILDE_TABLE};

use crate::collections::{BaseKind, CollectionKind};
use crate::error::Result;
use crate::group::SubgroupLattice;
use crate::Limits;

const ANNOTATIONS: &[&str] = &[
    "Bredon homology is not computed.",
    "Sharpness and ampleness of homology decompositions are not checked.",
    "Sporadic groups are beyond the supported order range.",
    "Equivalences equivariant only for a Sylow subgroup are reported as evidence tiers, not proofs.",
];

/// Runs `suite` for `lattice` at the prime `p`.
pub fn run(lattice: &SubgroupLattice, p: u64, suite: Suite, limits: Limits) -> Result<Report> {
    let ctx = Context::new(lattice, p, limits)?;
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        group: lattice.group().summary(),
        prime: p,
        suite,
        limits,
        edges: Vec::new(),
        homology: Vec::new(),
        homology_agreements: Vec::new(),
        inclusions: Vec::new(),
        equalities: Vec::new(),
        local_type: None,
        conditions: Vec::new(),
        counterexamples: Vec::new(),
        annotations: ANNOTATIONS.iter().map(|s| s.to_string()).collect(),
        summary: Summary::default(),
    };
    if suite.includes(Suite::Table31) {
        report.edges.extend(tables::run_tilde_table(&ctx));
    }
    if suite.includes(Suite::Table44) {
        report.edges.extend(tables::run_hat_table(&ctx));
    }
    if suite.includes(Suite::Table31) || suite.includes(Suite::Table44) {
        report.homology = inclusions::homology_profiles(&ctx);
        let hat_b = match report.edge(HAT_TABLE, &hat_nerve_label()) {
            Some(e) => e.status == EdgeStatus::Certified,
            None => ctx.conditions().iter().any(|c| c.holds),
        };
        report.homology_agreements = inclusions::homology_agreements(&ctx, hat_b);
    }
    if suite.includes(Suite::Counterexamples) {
        report.counterexamples = counterexamples::run(&ctx);
        if report.counterexamples.is_empty() {
            report
                .annotations
                .push("The counterexample checks apply only to the dihedral group of order 8 at p = 2.".into());
        }
    }
    if suite.includes(Suite::Inclusions) {
        report.inclusions = inclusions::inclusions(&ctx);
        report.equalities = inclusions::equalities(&ctx);
        report.local_type = Some(ctx.local.equalities_under_ch()?);
    }
    if suite.includes(Suite::Conditions) || suite.includes(Suite::Table44) {
        report.conditions = ctx.conditions().to_vec();
    }
    report.summarize();
    Ok(report)
}

fn hat_nerve_label() -> String {
    format!(
        "{}: {} -- {}",
        Row::Nerve,
        CollectionKind::Hat(BaseKind::S),
        CollectionKind::Hat(BaseKind::B)
    )
}
