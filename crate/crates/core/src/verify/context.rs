use std::cell::RefCell;
use std::collections::BTreeMap;

use crate::collections::{CollectionKind, Condition, ConditionReport, LocalStructure};
use crate::error::Result;
use crate::group::{SubgroupId, SubgroupLattice};
use crate::topology::{HomologyProfile, SimplicialComplex, SubgroupPoset};
use crate::Limits;

/// Everything computed once per (group, prime) and shared by the suites.
pub struct Context<'a> {
    pub lattice: &'a SubgroupLattice,
    pub local: LocalStructure<'a>,
    pub limits: Limits,
    posets: BTreeMap<CollectionKind, SubgroupPoset>,
    conditions: Vec<ConditionReport>,
    homology: RefCell<BTreeMap<CollectionKind, std::result::Result<HomologyProfile, String>>>,
    sylows: Vec<SubgroupId>,
}

impl<'a> Context<'a> {
    pub fn new(lattice: &'a SubgroupLattice, p: u64, limits: Limits) -> Result<Self> {
        let local = LocalStructure::new(lattice, p)?;
        let mut posets = BTreeMap::new();
        for kind in CollectionKind::ALL {
            posets.insert(kind, SubgroupPoset::new(local.collection(kind)?.members));
        }
        let conditions = Condition::ALL.iter().map(|&c| local.check_condition(c)).collect();
        let sylows = lattice.sylow_p(p)?;
        Ok(Self {
            lattice,
            local,
            limits,
            posets,
            conditions,
            homology: RefCell::new(BTreeMap::new()),
            sylows,
        })
    }

    pub fn prime(&self) -> u64 {
        self.local.prime()
    }

    pub fn poset(&self, kind: CollectionKind) -> &SubgroupPoset {
        &self.posets[&kind]
    }

    pub fn conditions(&self) -> &[ConditionReport] {
        &self.conditions
    }

    pub fn condition(&self, c: Condition) -> &ConditionReport {
        self.conditions
            .iter()
            .find(|r| r.condition == c)
            .expect("every condition is evaluated")
    }

    pub fn holds(&self, c: Condition) -> bool {
        self.condition(c).holds
    }

    /// Sylow p-subgroups in canonical order.
    pub fn sylows(&self) -> &[SubgroupId] {
        &self.sylows
    }

    /// Reduced homology of a whole collection, cached.
    pub fn homology(&self, kind: CollectionKind) -> std::result::Result<HomologyProfile, String> {
        if let Some(h) = self.homology.borrow().get(&kind) {
            return h.clone();
        }
        let computed = SimplicialComplex::of_poset(self.lattice, self.poset(kind), self.limits.max_simplices)
            .map(|c| HomologyProfile::compute(&c))
            .map_err(|e| e.to_string());
        self.homology.borrow_mut().insert(kind, computed.clone());
        computed
    }

    /// Human-readable name of a subgroup: index, order and generators.
    pub fn name(&self, h: SubgroupId) -> String {
        let gens = self.lattice.describe(h);
        format!(
            "{} (order {}, <{}>)",
            h,
            self.lattice.order(h),
            gens.join(", ")
        )
    }
}
