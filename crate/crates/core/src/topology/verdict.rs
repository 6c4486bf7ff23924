use serde::Serialize;

use super::certificate::{
    AcyclicSimplyConnected, Certificate, CollapseSequence, ConicalContraction, Direction, PosetMap,
};
use super::collapse::greedy_collapse;
use super::complex::SimplicialComplex;
use super::homology::HomologyProfile;
use super::pi1::simply_connected;
use super::poset::SubgroupPoset;
use crate::group::{SubgroupId, SubgroupLattice};
use crate::Limits;

/// Default bound on total relator length during Tietze simplification.
pub const TIETZE_BUDGET: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    Contractible,
    NotContractible,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    Certificate { certificate: Certificate },
    Empty,
    Disconnected { components: usize },
    Homology { profile: HomologyProfile },
    Note { message: String },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub evidence: Evidence,
}

impl Verdict {
    fn contractible(certificate: Certificate) -> Self {
        Self {
            status: VerdictStatus::Contractible,
            evidence: Evidence::Certificate { certificate },
        }
    }

    fn not(evidence: Evidence) -> Self {
        Self {
            status: VerdictStatus::NotContractible,
            evidence,
        }
    }

    fn unknown(message: impl Into<String>) -> Self {
        Self {
            status: VerdictStatus::Unknown,
            evidence: Evidence::Note {
                message: message.into(),
            },
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.evidence {
            Evidence::Certificate { certificate } => Some(certificate),
            _ => None,
        }
    }
}

/// Searches for `f(x) = x ∨ x₀` or `f(x) = x ∧ x₀` staying inside the poset.
/// With `equivariance`, only apexes fixed by that subgroup are tried.
pub fn find_conical_contraction(
    lattice: &SubgroupLattice,
    poset: &SubgroupPoset,
    equivariance: Option<SubgroupId>,
) -> Option<ConicalContraction> {
    if let Some(k) = equivariance {
        if !poset.is_invariant_under(lattice, k) {
            return None;
        }
    }
    let build = |apex: SubgroupId, direction: Direction, map: PosetMap| ConicalContraction {
        domain: poset.clone(),
        map,
        apex,
        direction,
        equivariant_under: equivariance,
    };
    if let Some(top) = poset.maximum(lattice) {
        return Some(build(top, Direction::Up, PosetMap::constant(poset, top)));
    }
    if let Some(bottom) = poset.minimum(lattice) {
        return Some(build(bottom, Direction::Down, PosetMap::constant(poset, bottom)));
    }
    for &apex in poset.members() {
        if equivariance.is_some_and(|k| !lattice.subgroup_normalizes(k, apex)) {
            continue;
        }
        for (direction, op) in [
            (Direction::Up, SubgroupLattice::join as fn(&SubgroupLattice, SubgroupId, SubgroupId) -> SubgroupId),
            (Direction::Down, SubgroupLattice::meet),
        ] {
            let mut images = Vec::with_capacity(poset.len());
            for &x in poset.members() {
                let fx = op(lattice, x, apex);
                if !poset.contains(fx) {
                    break;
                }
                images.push(fx);
            }
            if images.len() == poset.len() {
                let cert = build(apex, direction, PosetMap { images });
                if cert.verify(lattice).is_ok() {
                    return Some(cert);
                }
            }
        }
    }
    None
}

/// Three-valued contractibility test. `equivariance` restricts positive
/// answers to homotopies that commute with that subgroup's action; negative
/// answers are unaffected since they hold nonequivariantly.
pub fn contractibility(
    lattice: &SubgroupLattice,
    poset: &SubgroupPoset,
    equivariance: Option<SubgroupId>,
    limits: &Limits,
) -> Verdict {
    if poset.is_empty() {
        return Verdict::not(Evidence::Empty);
    }
    if let Some(c) = find_conical_contraction(lattice, poset, equivariance) {
        return Verdict::contractible(Certificate::Conical(c));
    }
    let complex = match SimplicialComplex::of_poset(lattice, poset, limits.max_simplices) {
        Ok(c) => c,
        Err(e) => return Verdict::unknown(e.to_string()),
    };
    if equivariance.is_none() {
        let run = greedy_collapse(&complex);
        if run.reaches_point() {
            return Verdict::contractible(Certificate::Collapse(CollapseSequence {
                domain: poset.clone(),
                pairs: run.pairs,
            }));
        }
    }
    let components = complex.component_count();
    if components > 1 {
        return Verdict::not(Evidence::Disconnected { components });
    }
    let profile = HomologyProfile::compute(&complex);
    if !profile.is_acyclic() {
        return Verdict::not(Evidence::Homology { profile });
    }
    if equivariance.is_some() {
        return Verdict::unknown("acyclic, but no equivariant contraction found");
    }
    if simply_connected(&complex, TIETZE_BUDGET) {
        return Verdict::contractible(Certificate::AcyclicSimplyConnected(AcyclicSimplyConnected {
            domain: poset.clone(),
            tietze_budget: TIETZE_BUDGET,
        }));
    }
    Verdict::unknown("acyclic, fundamental group not resolved")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collections::{BaseKind, CollectionKind, LocalStructure};
    use crate::group::builtin;

    fn lattice(name: &str) -> SubgroupLattice {
        SubgroupLattice::enumerate(builtin::resolve(name).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn poset_with_minimum_is_contractible() {
        let l = lattice("D8");
        let z = l.center(l.whole());
        let all = SubgroupPoset::new(l.ids().filter(|&h| l.order(h) > 1).collect());
        let v = contractibility(&l, &all.above(&l, z, false), None, &Limits::default());
        assert_eq!(v.status, VerdictStatus::Contractible);
        assert!(v.certificate().unwrap().verify(&l, &Limits::default()).is_ok());
    }

    #[test]
    fn two_incomparable_points_are_not_contractible() {
        let l = lattice("D8");
        let twos: Vec<_> = l.of_order(2).take(2).collect();
        let v = contractibility(&l, &SubgroupPoset::new(twos), None, &Limits::default());
        assert_eq!(v.status, VerdictStatus::NotContractible);
        assert_eq!(v.evidence, Evidence::Disconnected { components: 2 });
    }

    #[test]
    fn tilde_a_of_d8_is_a_cone_over_the_center() {
        let l = lattice("D8");
        let s = LocalStructure::new(&l, 2).unwrap();
        let ta = s.collection(CollectionKind::Tilde(BaseKind::A)).unwrap();
        let poset = SubgroupPoset::new(ta.members.clone());
        let complex = SimplicialComplex::of_poset(&l, &poset, 1000).unwrap();
        assert_eq!(complex.f_vector(), vec![3, 2]);
        let v = contractibility(&l, &poset, Some(l.whole()), &Limits::default());
        assert_eq!(v.status, VerdictStatus::Contractible);
        let cert = v.certificate().unwrap();
        assert!(cert.verify(&l, &Limits::default()).is_ok());
        assert_eq!(cert.equivariance(), Some(l.whole()));
    }

    #[test]
    fn quillen_complex_of_s3_at_two_is_discrete() {
        let l = lattice("S3");
        let s = LocalStructure::new(&l, 2).unwrap();
        let a = s.collection(CollectionKind::Base(BaseKind::A)).unwrap();
        let v = contractibility(&l, &SubgroupPoset::new(a.members), None, &Limits::default());
        assert_eq!(v.evidence, Evidence::Disconnected { components: 3 });
    }

    #[test]
    fn empty_poset_is_not_contractible() {
        let l = lattice("S3");
        let v = contractibility(&l, &SubgroupPoset::default(), None, &Limits::default());
        assert_eq!(v.evidence, Evidence::Empty);
    }
}
