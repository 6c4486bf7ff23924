use std::fmt;

use serde::Serialize;

use super::{BaseKind, CollectionKind, LocalStructure};
use crate::error::Result;
use crate::group::{p_part, SubgroupId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Condition {
    /// Normalizers of distinguished subgroups lie in p-locals containing a Sylow.
    M,
    /// Central-type elements of order p closed under commuting products.
    Cl,
    /// Local characteristic p-type.
    Ch,
}

impl Condition {
    pub const ALL: [Condition; 3] = [Condition::Cl, Condition::Ch, Condition::M];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::M => "M",
            Condition::Cl => "Cl",
            Condition::Ch => "Ch",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ConditionWitness {
    /// A distinguished `subgroup` whose normalizer lies in no p-local
    /// overgroup of full p-part.
    NoLocalOvergroup {
        subgroup: SubgroupId,
        normalizer: SubgroupId,
    },
    /// Commuting central-type `x`, `y` whose product has order p but is not
    /// of central type.
    ProductNotCentral {
        x: String,
        y: String,
        product: String,
    },
    /// A p-local `local` with `C_local(core) ⊄ core`, `core = O_p(local)`.
    CentralizerEscapesCore {
        local: SubgroupId,
        core: SubgroupId,
        centralizer: SubgroupId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub holds: bool,
    /// First witness in canonical order; empty iff `holds`.
    pub witnesses: Vec<ConditionWitness>,
}

pub(super) fn check(s: &LocalStructure<'_>, which: Condition) -> ConditionReport {
    let witness = match which {
        Condition::M => check_m(s),
        Condition::Cl => check_cl(s),
        Condition::Ch => check_ch(s),
    };
    ConditionReport {
        condition: which,
        holds: witness.is_none(),
        witnesses: witness.into_iter().collect(),
    }
}

fn p_locals(s: &LocalStructure<'_>) -> Vec<SubgroupId> {
    let mut out: Vec<SubgroupId> = s.p_subgroups().iter().map(|&q| s.normalizer(q)).collect();
    out.sort();
    out.dedup();
    out
}

fn check_m(s: &LocalStructure<'_>) -> Option<ConditionWitness> {
    let lattice = s.lattice();
    let sylow_order = p_part(lattice.group().order(), s.prime());
    let qualifying: Vec<SubgroupId> = p_locals(s)
        .into_iter()
        .filter(|&m| p_part(lattice.order(m), s.prime()) == sylow_order)
        .collect();
    s.p_subgroups()
        .iter()
        .copied()
        .filter(|&h| s.is_distinguished(h))
        .find_map(|h| {
            let n = s.normalizer(h);
            let ok = qualifying.iter().any(|&m| lattice.is_subgroup_of(n, m));
            (!ok).then_some(ConditionWitness::NoLocalOvergroup {
                subgroup: h,
                normalizer: n,
            })
        })
}

fn check_cl(s: &LocalStructure<'_>) -> Option<ConditionWitness> {
    let g = s.lattice().group();
    let e0 = s.central_type_sets().e0;
    for (i, &x) in e0.iter().enumerate() {
        for &y in &e0[i..] {
            if !g.commute(x, y) {
                continue;
            }
            let z = g.mul(x, y);
            if g.element_order(z) as u64 == s.prime() && !s.in_e0(z) {
                return Some(ConditionWitness::ProductNotCentral {
                    x: g.element(x).to_string(),
                    y: g.element(y).to_string(),
                    product: g.element(z).to_string(),
                });
            }
        }
    }
    None
}

fn check_ch(s: &LocalStructure<'_>) -> Option<ConditionWitness> {
    let lattice = s.lattice();
    p_locals(s).into_iter().find_map(|h| {
        let core = lattice.p_core(h, s.prime());
        let centralizer = lattice.centralizer_in(h, core);
        (!lattice.is_subgroup_of(centralizer, core)).then_some(
            ConditionWitness::CentralizerEscapesCore {
                local: h,
                core,
                centralizer,
            },
        )
    })
}

/// Comparison of `B`, hat-`B` and `Bcen`, which coincide for groups of
/// local characteristic p-type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalTypeEqualities {
    pub ch_holds: bool,
    pub radical: Vec<SubgroupId>,
    pub distinguished_radical: Vec<SubgroupId>,
    pub centric_radical: Vec<SubgroupId>,
    pub equal: bool,
    /// A subgroup lying in one of the three sets but not all of them.
    pub counterexample: Option<SubgroupId>,
}

pub(super) fn equalities_under_ch(s: &LocalStructure<'_>) -> Result<LocalTypeEqualities> {
    let b = s.collection(CollectionKind::Base(BaseKind::B))?;
    let hb = s.collection(CollectionKind::Hat(BaseKind::B))?;
    let bc = s.collection(CollectionKind::Bcen)?;
    let counterexample = b
        .members
        .iter()
        .chain(&hb.members)
        .chain(&bc.members)
        .copied()
        .filter(|&h| !(b.contains(h) && hb.contains(h) && bc.contains(h)))
        .min();
    Ok(LocalTypeEqualities {
        ch_holds: check(s, Condition::Ch).holds,
        equal: counterexample.is_none(),
        radical: b.members,
        distinguished_radical: hb.members,
        centric_radical: bc.members,
        counterexample,
    })
}
