//! Central-type element sets, the tilde and hat operators on p-subgroups,
//! and the named collections built from them.

mod conditions;
mod kinds;
mod principal;

use fixedbitset::FixedBitSet;
use serde::Serialize;

pub use conditions::{Condition, ConditionReport, ConditionWitness, LocalTypeEqualities};
pub use kinds::{BaseKind, Collection, CollectionKind};

use crate::error::{Error, Result};
use crate::group::{p_part, ElementId, SubgroupId, SubgroupLattice, IDENTITY};

/// `E₀(G)` and `E₁(G)` as sorted element lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralTypeSets {
    pub e0: Vec<ElementId>,
    pub e1: Vec<ElementId>,
}

/// Per-subgroup data for one prime, computed once for every nontrivial
/// p-subgroup of the lattice.
#[derive(Clone, Debug)]
struct PData {
    normalizer: SubgroupId,
    centralizer: SubgroupId,
    center: SubgroupId,
    normalizer_core: SubgroupId,
    tilde: SubgroupId,
    hat: SubgroupId,
}

/// The p-local picture of a group: central-type elements, the tilde and
/// hat operators, and radical/centric tests.
pub struct LocalStructure<'a> {
    lattice: &'a SubgroupLattice,
    p: u64,
    e0: FixedBitSet,
    e1: FixedBitSet,
    data: Vec<Option<PData>>,
    p_subgroups: Vec<SubgroupId>,
}

impl<'a> LocalStructure<'a> {
    pub fn new(lattice: &'a SubgroupLattice, p: u64) -> Result<Self> {
        lattice.check_prime(p)?;
        let e0 = compute_e0(lattice, p)?;
        let e1 = compute_e1(lattice, p, &e0);
        let mut s = Self {
            lattice,
            p,
            e0,
            e1,
            data: vec![None; lattice.len()],
            p_subgroups: lattice.p_subgroups(p),
        };
        for &h in &s.p_subgroups.clone() {
            let normalizer = lattice.normalizer(h);
            let d = PData {
                normalizer,
                centralizer: lattice.centralizer(h),
                center: lattice.center(h),
                normalizer_core: lattice.p_core(normalizer, p),
                tilde: s.compute_tilde(h)?,
                hat: s.compute_hat(h)?,
            };
            s.data[h.0] = Some(d);
        }
        Ok(s)
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lattice
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Nontrivial p-subgroups in canonical order.
    pub fn p_subgroups(&self) -> &[SubgroupId] {
        &self.p_subgroups
    }

    pub fn central_type_sets(&self) -> CentralTypeSets {
        CentralTypeSets {
            e0: self.e0.ones().collect(),
            e1: self.e1.ones().collect(),
        }
    }

    pub fn in_e0(&self, x: ElementId) -> bool {
        self.e0.contains(x)
    }

    pub fn in_e1(&self, x: ElementId) -> bool {
        self.e1.contains(x)
    }

    fn pdata(&self, h: SubgroupId) -> Result<&PData> {
        match self.data.get(h.0).and_then(|d| d.as_ref()) {
            Some(d) => Ok(d),
            None => Err(Error::NotAPGroup {
                order: self.lattice.order(h),
                p: self.p,
            }),
        }
    }

    fn compute_tilde(&self, h: SubgroupId) -> Result<SubgroupId> {
        let omega = self.lattice.omega1_center(h, self.p)?;
        let mut members = self.lattice.members(omega).clone();
        let mut allowed = self.e1.clone();
        allowed.insert(IDENTITY);
        members.intersect_with(&allowed);
        self.lattice.from_members(&members)
    }

    fn compute_hat(&self, h: SubgroupId) -> Result<SubgroupId> {
        let omega = self.lattice.omega1_center(h, self.p)?;
        let xs: Vec<ElementId> = self
            .lattice
            .members(omega)
            .ones()
            .filter(|&x| self.e0.contains(x))
            .collect();
        Ok(self.lattice.generated_subgroup(&xs))
    }

    /// `P̃ = Ω₁Z(P) ∩ E₁(G)` (with the identity adjoined).
    pub fn tilde_of(&self, h: SubgroupId) -> Result<SubgroupId> {
        if h == self.lattice.trivial() {
            return Ok(h);
        }
        Ok(self.pdata(h)?.tilde)
    }

    /// `P̂ = ⟨Ω₁Z(P) ∩ E₀(G)⟩`.
    pub fn hat_of(&self, h: SubgroupId) -> Result<SubgroupId> {
        if h == self.lattice.trivial() {
            return Ok(h);
        }
        Ok(self.pdata(h)?.hat)
    }

    pub fn normalizer(&self, h: SubgroupId) -> SubgroupId {
        match self.pdata(h) {
            Ok(d) => d.normalizer,
            Err(_) => self.lattice.normalizer(h),
        }
    }

    pub fn centralizer(&self, h: SubgroupId) -> SubgroupId {
        match self.pdata(h) {
            Ok(d) => d.centralizer,
            Err(_) => self.lattice.centralizer(h),
        }
    }

    /// `O_p(N_G(h))`.
    pub fn normalizer_core(&self, h: SubgroupId) -> SubgroupId {
        match self.pdata(h) {
            Ok(d) => d.normalizer_core,
            Err(_) => self.lattice.p_core(self.lattice.normalizer(h), self.p),
        }
    }

    pub fn is_p_subgroup(&self, h: SubgroupId) -> bool {
        self.lattice.is_p_group(h, self.p)
    }

    /// `R = O_p(N_G(R))`.
    pub fn is_p_radical(&self, h: SubgroupId) -> bool {
        self.is_p_subgroup(h) && self.normalizer_core(h) == h
    }

    /// `Z(R)` is a Sylow p-subgroup of `C_G(R)`.
    pub fn is_p_centric(&self, h: SubgroupId) -> bool {
        if !self.is_p_subgroup(h) {
            return false;
        }
        let (center, centralizer) = match self.pdata(h) {
            Ok(d) => (d.center, d.centralizer),
            Err(_) => (self.lattice.center(h), self.lattice.centralizer(h)),
        };
        self.lattice.is_subgroup_of(center, centralizer)
            && self.lattice.order(center) == p_part(self.lattice.order(centralizer), self.p)
    }

    /// p-centric with `O_p(N_G(P) / P·C_G(P)) = 1`.
    pub fn is_principal_p_radical(&self, h: SubgroupId) -> Result<bool> {
        if !self.is_p_centric(h) {
            return Ok(false);
        }
        principal::quotient_core_is_trivial(self, h)
    }

    pub fn is_distinguished(&self, h: SubgroupId) -> bool {
        h != self.lattice.trivial()
            && self
                .hat_of(h)
                .map(|x| x != self.lattice.trivial())
                .unwrap_or(false)
    }

    /// Whether all elements of order `p` form one conjugacy class.
    pub fn single_class_of_order_p(&self) -> bool {
        let g = self.lattice.group();
        g.element_classes()
            .iter()
            .filter(|c| g.element_order(c[0]) as u64 == self.p)
            .count()
            == 1
    }

    pub fn collection(&self, kind: CollectionKind) -> Result<Collection> {
        kinds::build(self, kind)
    }

    pub fn check_condition(&self, which: Condition) -> ConditionReport {
        conditions::check(self, which)
    }

    pub fn equalities_under_ch(&self) -> Result<LocalTypeEqualities> {
        conditions::equalities_under_ch(self)
    }
}

/// Elements of order `p` in the center of some Sylow p-subgroup.
pub fn compute_e0(lattice: &SubgroupLattice, p: u64) -> Result<FixedBitSet> {
    let g = lattice.group();
    let mut e0 = FixedBitSet::with_capacity(g.order());
    for s in lattice.sylow_p(p)? {
        let z = lattice.center(s);
        for x in lattice.members(z).ones() {
            if g.element_order(x) as u64 == p {
                e0.insert(x);
            }
        }
    }
    Ok(e0)
}

/// Least superset of `e0` closed under conjugation and under products of
/// commuting members that again have order `p`.
pub fn compute_e1(lattice: &SubgroupLattice, p: u64, e0: &FixedBitSet) -> FixedBitSet {
    let g = lattice.group();
    let mut e1 = e0.clone();
    loop {
        let mut changed = false;
        let current: Vec<ElementId> = e1.ones().collect();
        for &x in &current {
            for &s in g.generator_ids() {
                let y = g.conj(s, x);
                if !e1.contains(y) {
                    e1.insert(y);
                    changed = true;
                }
            }
        }
        let current: Vec<ElementId> = e1.ones().collect();
        for (i, &x) in current.iter().enumerate() {
            for &y in &current[i + 1..] {
                if !g.commute(x, y) {
                    continue;
                }
                let z = g.mul(x, y);
                if g.element_order(z) as u64 == p && !e1.contains(z) {
                    e1.insert(z);
                    changed = true;
                }
            }
        }
        if !changed {
            return e1;
        }
    }
}
