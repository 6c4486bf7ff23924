use serde::{Deserialize, Serialize};

use crate::group::{SubgroupId, SubgroupLattice};

/// A set of subgroups ordered by inclusion. The ambient group acts on it by
/// conjugation whenever the set is conjugation-invariant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubgroupPoset {
    members: Vec<SubgroupId>,
}

impl SubgroupPoset {
    pub fn new(mut members: Vec<SubgroupId>) -> Self {
        members.sort();
        members.dedup();
        Self { members }
    }

    pub fn members(&self) -> &[SubgroupId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: SubgroupId) -> bool {
        self.members.binary_search(&h).is_ok()
    }

    pub fn position(&self, h: SubgroupId) -> Option<usize> {
        self.members.binary_search(&h).ok()
    }

    pub fn is_subposet_of(&self, other: &SubgroupPoset) -> bool {
        self.members.iter().all(|&h| other.contains(h))
    }

    fn filter(&self, pred: impl Fn(SubgroupId) -> bool) -> Self {
        Self {
            members: self.members.iter().copied().filter(|&h| pred(h)).collect(),
        }
    }

    /// `𝒳_{≥x}` (or `𝒳_{>x}` when `strict`); `x` need not be a member.
    pub fn above(&self, lattice: &SubgroupLattice, x: SubgroupId, strict: bool) -> Self {
        self.filter(|h| lattice.is_subgroup_of(x, h) && !(strict && h == x))
    }

    /// `𝒳_{≤x}` (or `𝒳_{<x}` when `strict`).
    pub fn below(&self, lattice: &SubgroupLattice, x: SubgroupId, strict: bool) -> Self {
        self.filter(|h| lattice.is_subgroup_of(h, x) && !(strict && h == x))
    }

    /// Members `h` with `lower ≤ h ≤ upper` for the given optional bounds.
    pub fn bounded_between(
        &self,
        lattice: &SubgroupLattice,
        lower: Option<SubgroupId>,
        upper: Option<SubgroupId>,
    ) -> Self {
        self.filter(|h| {
            lower.map_or(true, |l| lattice.is_subgroup_of(l, h))
                && upper.map_or(true, |u| lattice.is_subgroup_of(h, u))
        })
    }

    /// `𝒳^H`: members normalized by `h`.
    pub fn fixed_points(&self, lattice: &SubgroupLattice, h: SubgroupId) -> Self {
        self.filter(|q| lattice.subgroup_normalizes(h, q))
    }

    pub fn is_invariant_under(&self, lattice: &SubgroupLattice, k: SubgroupId) -> bool {
        let gens = lattice.subgroup(k).generators();
        self.members
            .iter()
            .all(|&h| gens.iter().all(|&g| self.contains(lattice.conjugate(h, g))))
    }

    pub fn maximum(&self, lattice: &SubgroupLattice) -> Option<SubgroupId> {
        let top = *self.members.last()?;
        self.members
            .iter()
            .all(|&h| lattice.is_subgroup_of(h, top))
            .then_some(top)
    }

    pub fn minimum(&self, lattice: &SubgroupLattice) -> Option<SubgroupId> {
        let bottom = *self.members.first()?;
        self.members
            .iter()
            .all(|&h| lattice.is_subgroup_of(bottom, h))
            .then_some(bottom)
    }

    /// Strict up-sets: `ups[i]` lists positions `j` with `members[i] < members[j]`.
    pub fn strict_up_sets(&self, lattice: &SubgroupLattice) -> Vec<Vec<u32>> {
        let n = self.members.len();
        (0..n)
            .map(|i| {
                (i + 1..n)
                    .filter(|&j| lattice.is_proper_subgroup_of(self.members[i], self.members[j]))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect()
    }
}
