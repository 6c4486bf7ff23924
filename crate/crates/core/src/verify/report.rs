use std::fmt;

use serde::Serialize;

use crate::collections::{Condition, ConditionReport, LocalTypeEqualities};
use crate::group::GroupSummary;
use crate::Limits;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Table31,
    Table44,
    Counterexamples,
    Inclusions,
    Conditions,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Table31,
        Suite::Table44,
        Suite::Counterexamples,
        Suite::Inclusions,
        Suite::Conditions,
        Suite::All,
    ];

    pub fn includes(self, part: Suite) -> bool {
        self == part || self == Suite::All
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Table31 => "table31",
            Suite::Table44 => "table44",
            Suite::Counterexamples => "counterexamples",
            Suite::Inclusions => "inclusions",
            Suite::Conditions => "conditions",
            Suite::All => "all",
        })
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Line style of an edge in a comparison table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Style {
    /// Equivalence equivariant for the whole group.
    Solid,
    /// Equivalence equivariant for a Sylow p-subgroup.
    Dashed,
    /// Ordinary homotopy equivalence.
    Dotted,
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Solid => "solid",
            Style::Dashed => "dashed",
            Style::Dotted => "dotted",
        })
    }
}

/// Rows of the comparison tables, named by the model they represent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Row {
    /// Orbit-category model; fixed points at `H` are `𝒞_{≥H}`.
    #[serde(rename = "EO")]
    Orbit,
    /// The nerve itself; fixed points at `H` are `𝒞^H`.
    #[serde(rename = "C")]
    Nerve,
    /// Centralizer model; fixed points at `H` are `𝒞_{≤C_G(H)}`.
    #[serde(rename = "EA")]
    Centralizer,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Row::Orbit => "EO",
            Row::Nerve => "C",
            Row::Centralizer => "EA",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EdgeStatus {
    Certified,
    #[serde(rename = "HOMOLOGY-CONSISTENT")]
    HomologyConsistent,
    Skipped,
    Inconclusive,
    Mismatch,
}

impl fmt::Display for EdgeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeStatus::Certified => "CERTIFIED",
            EdgeStatus::HomologyConsistent => "HOMOLOGY-CONSISTENT",
            EdgeStatus::Skipped => "SKIPPED",
            EdgeStatus::Inconclusive => "INCONCLUSIVE",
            EdgeStatus::Mismatch => "MISMATCH",
        })
    }
}

/// One line of a comparison table together with what was established for it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeResult {
    pub table: String,
    /// `horizontal` (same row, adjacent collections) or `vertical` (same
    /// collection, adjacent rows).
    pub orientation: &'static str,
    pub from: String,
    pub to: String,
    pub label: String,
    pub style: Style,
    /// Any one of these conditions suffices; empty means unconditional.
    pub hypothesis: Vec<Condition>,
    pub status: EdgeStatus,
    pub evidence: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionResult {
    pub sub: String,
    pub sup: String,
    pub holds: bool,
    /// Members of `sub` missing from `sup`, as lattice indices.
    pub violations: Vec<usize>,
}

/// Comparison of several collections' member sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityResult {
    pub name: String,
    pub applies: bool,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleCheck {
    pub id: String,
    pub statement: String,
    pub expected: String,
    pub observed: String,
    pub reproduced: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CollectionHomology {
    pub collection: String,
    pub size: usize,
    pub homology: Option<crate::topology::HomologyProfile>,
    pub summary: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub certified: usize,
    pub homology_consistent: usize,
    pub skipped: usize,
    pub inconclusive: usize,
    pub mismatch: usize,
    pub inclusion_violations: usize,
    pub equality_failures: usize,
    pub counterexamples_not_reproduced: usize,
    pub homology_disagreements: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub group: GroupSummary,
    pub prime: u64,
    pub suite: Suite,
    pub limits: Limits,
    pub edges: Vec<EdgeResult>,
    pub homology: Vec<CollectionHomology>,
    pub homology_agreements: Vec<EqualityResult>,
    pub inclusions: Vec<InclusionResult>,
    pub equalities: Vec<EqualityResult>,
    pub local_type: Option<LocalTypeEqualities>,
    pub conditions: Vec<ConditionReport>,
    pub counterexamples: Vec<CounterexampleCheck>,
    pub annotations: Vec<String>,
    pub summary: Summary,
}

impl Report {
    pub(crate) fn summarize(&mut self) {
        let mut s = Summary::default();
        for e in &self.edges {
            match e.status {
                EdgeStatus::Certified => s.certified += 1,
                EdgeStatus::HomologyConsistent => s.homology_consistent += 1,
                EdgeStatus::Skipped => s.skipped += 1,
                EdgeStatus::Inconclusive => s.inconclusive += 1,
                EdgeStatus::Mismatch => s.mismatch += 1,
            }
        }
        s.inclusion_violations = self.inclusions.iter().filter(|i| !i.holds).count();
        s.equality_failures = self.equalities.iter().filter(|e| e.applies && !e.holds).count();
        s.counterexamples_not_reproduced = self.counterexamples.iter().filter(|c| !c.reproduced).count();
        s.homology_disagreements = self
            .homology_agreements
            .iter()
            .filter(|e| e.applies && !e.holds)
            .count();
        self.summary = s;
    }

    /// Any result contradicting a claim being checked.
    pub fn has_mismatch(&self) -> bool {
        let s = &self.summary;
        s.mismatch
            + s.inclusion_violations
            + s.equality_failures
            + s.counterexamples_not_reproduced
            + s.homology_disagreements
            > 0
    }

    pub fn has_inconclusive(&self) -> bool {
        self.summary.inconclusive > 0
    }

    pub fn edge(&self, table: &str, label: &str) -> Option<&EdgeResult> {
        self.edges.iter().find(|e| e.table == table && e.label == label)
    }
}
