use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::perm_group::{is_p_power, is_prime, p_part, ElementId, PermutationGroup, IDENTITY};
use crate::error::{Error, Result};
use crate::Limits;

/// Handle to a subgroup: its position in the canonically ordered lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubgroupId(pub usize);

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    generators: Vec<ElementId>,
}

impl Subgroup {
    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.ones()
    }
}

fn canonical_cmp(a: &Subgroup, b: &Subgroup) -> Ordering {
    a.order
        .cmp(&b.order)
        .then_with(|| a.members.ones().cmp(b.members.ones()))
}

/// Every subgroup of a group, with inclusion and conjugation data.
///
/// Subgroups are ordered by order, then lexicographically by their sorted
/// member lists. The trivial subgroup is always `SubgroupId(0)` and the
/// whole group is the last entry.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: PermutationGroup,
    subgroups: Vec<Subgroup>,
    index: HashMap<FixedBitSet, SubgroupId>,
    class_of: Vec<usize>,
    classes: Vec<Vec<SubgroupId>>,
    transversal: Vec<ElementId>,
}

/// Persisted form of a lattice, keyed by the group's content hash.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeData {
    pub format_version: u32,
    pub group_hash: String,
    pub subgroups: Vec<SubgroupData>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubgroupData {
    pub members: Vec<usize>,
    pub generators: Vec<usize>,
}

pub const LATTICE_FORMAT_VERSION: u32 = 1;

impl SubgroupLattice {
    /// Enumerates all subgroups: cyclic subgroups first, then joins with
    /// cyclic subgroups until nothing new appears.
    pub fn enumerate(group: PermutationGroup, limits: &Limits) -> Result<Self> {
        if group.order() > limits.max_order {
            return Err(Error::CapExceeded {
                what: "group order",
                limit: limits.max_order,
                actual: group.order(),
            });
        }
        let n = group.order();
        let mut found: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut list: Vec<Subgroup> = Vec::new();

        for x in 0..n {
            let mut members = FixedBitSet::with_capacity(n);
            let mut y = IDENTITY;
            loop {
                members.insert(y);
                y = group.mul(y, x);
                if y == IDENTITY {
                    break;
                }
            }
            if !found.contains_key(&members) {
                let generators = if x == IDENTITY { vec![] } else { vec![x] };
                found.insert(members.clone(), list.len());
                list.push(Subgroup {
                    order: members.count_ones(..),
                    members,
                    generators,
                });
            }
        }
        let cyclic: Vec<usize> = (0..list.len()).collect();

        let mut i = 0;
        while i < list.len() {
            for &c in &cyclic {
                if list[c].members.is_subset(&list[i].members) {
                    continue;
                }
                let c_gen = list[c].generators[0];
                let mut generators = list[i].generators.clone();
                generators.push(c_gen);
                let members = close_with(&group, list[i].members.clone(), &generators);
                if found.contains_key(&members) {
                    continue;
                }
                found.insert(members.clone(), list.len());
                list.push(Subgroup {
                    order: members.count_ones(..),
                    members,
                    generators,
                });
                if list.len() > limits.max_subgroups {
                    return Err(Error::CapExceeded {
                        what: "subgroup lattice size",
                        limit: limits.max_subgroups,
                        actual: list.len(),
                    });
                }
            }
            i += 1;
        }
        Ok(Self::from_subgroups(group, list))
    }

    fn from_subgroups(group: PermutationGroup, mut list: Vec<Subgroup>) -> Self {
        list.sort_by(canonical_cmp);
        let index = list
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members.clone(), SubgroupId(i)))
            .collect();
        let mut lattice = Self {
            group,
            subgroups: list,
            index,
            class_of: Vec::new(),
            classes: Vec::new(),
            transversal: Vec::new(),
        };
        lattice.compute_classes();
        lattice
    }

    fn compute_classes(&mut self) {
        let count = self.subgroups.len();
        let mut class_of = vec![usize::MAX; count];
        let mut transversal = vec![IDENTITY; count];
        let mut classes = Vec::new();
        let gens: Vec<ElementId> = self.group.generator_ids().to_vec();
        for start in 0..count {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            transversal[start] = IDENTITY;
            let mut class = vec![SubgroupId(start)];
            let mut k = 0;
            while k < class.len() {
                let h = class[k];
                for &g in &gens {
                    let c = self.conjugate(h, g);
                    if class_of[c.0] == usize::MAX {
                        class_of[c.0] = id;
                        transversal[c.0] = self.group.mul(g, transversal[h.0]);
                        class.push(c);
                    }
                }
                k += 1;
            }
            class.sort();
            classes.push(class);
        }
        self.class_of = class_of;
        self.classes = classes;
        self.transversal = transversal;
    }

    pub fn to_data(&self) -> LatticeData {
        LatticeData {
            format_version: LATTICE_FORMAT_VERSION,
            group_hash: self.group.content_hash(),
            subgroups: self
                .subgroups
                .iter()
                .map(|s| SubgroupData {
                    members: s.members.ones().collect(),
                    generators: s.generators.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds a lattice from cached data after validating it against `group`.
    pub fn from_data(group: PermutationGroup, data: &LatticeData) -> Result<Self> {
        if data.format_version != LATTICE_FORMAT_VERSION {
            return Err(Error::Cache(format!(
                "format version {} (expected {LATTICE_FORMAT_VERSION})",
                data.format_version
            )));
        }
        if data.group_hash != group.content_hash() {
            return Err(Error::Cache("group hash mismatch".into()));
        }
        let n = group.order();
        let mut list = Vec::with_capacity(data.subgroups.len());
        for s in &data.subgroups {
            let mut members = FixedBitSet::with_capacity(n);
            for &x in &s.members {
                if x >= n {
                    return Err(Error::Cache(format!("element {x} out of range")));
                }
                members.insert(x);
            }
            let mut start = FixedBitSet::with_capacity(n);
            start.insert(IDENTITY);
            if s.generators.iter().any(|&x| x >= n)
                || close_with(&group, start, &s.generators) != members
            {
                return Err(Error::Cache("cached subgroup does not match its generators".into()));
            }
            list.push(Subgroup {
                order: members.count_ones(..),
                members,
                generators: s.generators.clone(),
            });
        }
        Ok(Self::from_subgroups(group, list))
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SubgroupId> + DoubleEndedIterator {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn subgroup(&self, h: SubgroupId) -> &Subgroup {
        &self.subgroups[h.0]
    }

    pub fn order(&self, h: SubgroupId) -> usize {
        self.subgroups[h.0].order
    }

    pub fn members(&self, h: SubgroupId) -> &FixedBitSet {
        &self.subgroups[h.0].members
    }

    pub fn contains_element(&self, h: SubgroupId, x: ElementId) -> bool {
        self.subgroups[h.0].members.contains(x)
    }

    pub fn trivial(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn whole(&self) -> SubgroupId {
        SubgroupId(self.subgroups.len() - 1)
    }

    pub fn lookup(&self, members: &FixedBitSet) -> Option<SubgroupId> {
        self.index.get(members).copied()
    }

    pub fn from_members(&self, members: &FixedBitSet) -> Result<SubgroupId> {
        self.lookup(members).ok_or(Error::NotASubgroup)
    }

    /// Subgroups of a given order, in canonical order.
    pub fn of_order(&self, order: usize) -> impl Iterator<Item = SubgroupId> + '_ {
        let lo = self.subgroups.partition_point(|s| s.order < order);
        let hi = self.subgroups.partition_point(|s| s.order <= order);
        (lo..hi).map(SubgroupId)
    }

    /// `a ≤ b`.
    pub fn is_subgroup_of(&self, a: SubgroupId, b: SubgroupId) -> bool {
        a == b || self.members(a).is_subset(self.members(b))
    }

    /// `a < b`.
    pub fn is_proper_subgroup_of(&self, a: SubgroupId, b: SubgroupId) -> bool {
        a != b && self.members(a).is_subset(self.members(b))
    }

    pub fn subgroups_of(&self, h: SubgroupId) -> Vec<SubgroupId> {
        self.ids().filter(|&k| self.is_subgroup_of(k, h)).collect()
    }

    pub fn overgroups_of(&self, h: SubgroupId) -> Vec<SubgroupId> {
        self.ids().filter(|&k| self.is_subgroup_of(h, k)).collect()
    }

    /// The subgroup generated by `xs`.
    pub fn generated_subgroup(&self, xs: &[ElementId]) -> SubgroupId {
        let mut start = FixedBitSet::with_capacity(self.group.order());
        start.insert(IDENTITY);
        let members = close_with(&self.group, start, xs);
        self.lookup(&members)
            .expect("lattice contains every subgroup")
    }

    pub fn join(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        if self.is_subgroup_of(a, b) {
            return b;
        }
        if self.is_subgroup_of(b, a) {
            return a;
        }
        let mut gens = self.subgroups[a.0].generators.clone();
        gens.extend_from_slice(&self.subgroups[b.0].generators);
        let members = close_with(&self.group, self.members(a).clone(), &gens);
        self.lookup(&members)
            .expect("lattice contains every subgroup")
    }

    pub fn meet(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let mut members = self.members(a).clone();
        members.intersect_with(self.members(b));
        self.lookup(&members)
            .expect("intersection of subgroups is a subgroup")
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, h: SubgroupId, g: ElementId) -> SubgroupId {
        if g == IDENTITY {
            return h;
        }
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for x in self.members(h).ones() {
            members.insert(self.group.conj(g, x));
        }
        self.lookup(&members)
            .expect("lattice is closed under conjugation")
    }

    /// Whether `g` normalizes `h`.
    pub fn normalizes(&self, g: ElementId, h: SubgroupId) -> bool {
        let members = self.members(h);
        self.subgroups[h.0]
            .generators
            .iter()
            .all(|&x| members.contains(self.group.conj(g, x)))
    }

    /// Whether every element of `a` normalizes `b`.
    pub fn subgroup_normalizes(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.subgroups[a.0]
            .generators
            .iter()
            .all(|&g| self.normalizes(g, b))
    }

    /// `a ⊴ b`.
    pub fn is_normal_in(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.is_subgroup_of(a, b) && self.subgroup_normalizes(b, a)
    }

    fn collect(&self, pred: impl Fn(ElementId) -> bool) -> SubgroupId {
        let n = self.group.order();
        let mut members = FixedBitSet::with_capacity(n);
        for g in 0..n {
            if pred(g) {
                members.insert(g);
            }
        }
        self.lookup(&members).expect("set is a subgroup")
    }

    pub fn normalizer(&self, h: SubgroupId) -> SubgroupId {
        self.collect(|g| self.normalizes(g, h))
    }

    pub fn centralizer(&self, h: SubgroupId) -> SubgroupId {
        let gens = &self.subgroups[h.0].generators;
        self.collect(|g| gens.iter().all(|&x| self.group.commute(g, x)))
    }

    pub fn centralizer_of_element(&self, x: ElementId) -> SubgroupId {
        self.collect(|g| self.group.commute(g, x))
    }

    /// `N_within(h) = within ∩ N_G(h)`.
    pub fn normalizer_in(&self, within: SubgroupId, h: SubgroupId) -> SubgroupId {
        let members = self.members(within);
        self.collect(|g| members.contains(g) && self.normalizes(g, h))
    }

    /// `C_within(h)`.
    pub fn centralizer_in(&self, within: SubgroupId, h: SubgroupId) -> SubgroupId {
        self.meet(within, self.centralizer(h))
    }

    pub fn center(&self, h: SubgroupId) -> SubgroupId {
        let members = self.members(h);
        let gens = &self.subgroups[h.0].generators;
        self.collect(|g| members.contains(g) && gens.iter().all(|&x| self.group.commute(g, x)))
    }

    pub fn is_abelian(&self, h: SubgroupId) -> bool {
        let gens = &self.subgroups[h.0].generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.group.commute(a, b)))
    }

    pub fn is_p_group(&self, h: SubgroupId, p: u64) -> bool {
        is_p_power(self.order(h), p)
    }

    /// Abelian with every non-identity element of order `p`; true for the
    /// trivial subgroup.
    pub fn is_elementary_abelian(&self, h: SubgroupId, p: u64) -> bool {
        self.is_abelian(h)
            && self
                .members(h)
                .ones()
                .all(|x| x == IDENTITY || self.group.element_order(x) as u64 == p)
    }

    fn require_p_group(&self, h: SubgroupId, p: u64) -> Result<()> {
        if self.is_p_group(h, p) {
            Ok(())
        } else {
            Err(Error::NotAPGroup {
                order: self.order(h),
                p,
            })
        }
    }

    /// `Ω₁Z(P)`: the elements of `Z(P)` of order dividing `p`.
    pub fn omega1_center(&self, h: SubgroupId, p: u64) -> Result<SubgroupId> {
        self.require_p_group(h, p)?;
        let z = self.center(h);
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for x in self.members(z).ones() {
            if x == IDENTITY || self.group.element_order(x) as u64 == p {
                members.insert(x);
            }
        }
        Ok(self
            .lookup(&members)
            .expect("elements of order p in an abelian group form a subgroup"))
    }

    /// Sylow `p`-subgroups of `h`.
    pub fn sylow_in(&self, h: SubgroupId, p: u64) -> Vec<SubgroupId> {
        let target = p_part(self.order(h), p);
        self.of_order(target)
            .filter(|&k| self.is_subgroup_of(k, h))
            .collect()
    }

    /// Sylow `p`-subgroups of the ambient group.
    pub fn sylow_p(&self, p: u64) -> Result<Vec<SubgroupId>> {
        self.check_prime(p)?;
        Ok(self.sylow_in(self.whole(), p))
    }

    pub fn check_prime(&self, p: u64) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if self.group.order() % p as usize != 0 {
            return Err(Error::PrimeDoesNotDivide {
                p,
                order: self.group.order(),
            });
        }
        Ok(())
    }

    /// `O_p(h)`, the intersection of the Sylow `p`-subgroups of `h`.
    pub fn p_core(&self, h: SubgroupId, p: u64) -> SubgroupId {
        let sylows = self.sylow_in(h, p);
        let mut members = self.members(sylows[0]).clone();
        for s in &sylows[1..] {
            members.intersect_with(self.members(*s));
        }
        self.lookup(&members).expect("intersection is a subgroup")
    }

    /// The product `AB`, defined when one factor normalizes the other.
    pub fn product(&self, a: SubgroupId, b: SubgroupId) -> Result<SubgroupId> {
        if !self.subgroup_normalizes(a, b) && !self.subgroup_normalizes(b, a) {
            return Err(Error::NotMutuallyNormalizing);
        }
        Ok(self.join(a, b))
    }

    /// Nontrivial `p`-subgroups in canonical order.
    pub fn p_subgroups(&self, p: u64) -> Vec<SubgroupId> {
        self.ids()
            .filter(|&h| self.order(h) > 1 && self.is_p_group(h, p))
            .collect()
    }

    /// `{N_G(P) : 1 ≠ P a p-subgroup}`, sorted and deduplicated.
    pub fn p_local_subgroups(&self, p: u64) -> Result<Vec<SubgroupId>> {
        self.check_prime(p)?;
        let mut out: Vec<SubgroupId> = self
            .p_subgroups(p)
            .into_iter()
            .map(|q| self.normalizer(q))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Conjugacy class index of `h`.
    pub fn class_of(&self, h: SubgroupId) -> usize {
        self.class_of[h.0]
    }

    pub fn classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    /// Smallest member of each conjugacy class, in canonical order.
    pub fn class_representatives(&self) -> Vec<SubgroupId> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// An element `t` with `t · rep · t⁻¹ = h`, where `rep` is the class
    /// representative of `h`.
    pub fn conjugating_element(&self, h: SubgroupId) -> ElementId {
        self.transversal[h.0]
    }

    /// The generators of `h` rendered in cycle notation.
    pub fn describe(&self, h: SubgroupId) -> Vec<String> {
        self.subgroups[h.0]
            .generators
            .iter()
            .map(|&x| self.group.element(x).to_string())
            .collect()
    }
}

/// Closes `members` under right multiplication by `gens`.
fn close_with(group: &PermutationGroup, mut members: FixedBitSet, gens: &[ElementId]) -> FixedBitSet {
    let mut queue: Vec<ElementId> = members.ones().collect();
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = group.mul(x, g);
            if !members.contains(y) {
                members.insert(y);
                queue.push(y);
            }
        }
    }
    members
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    fn lattice(name: &str) -> SubgroupLattice {
        let g = builtin::resolve(name).unwrap();
        SubgroupLattice::enumerate(g, &Limits::default()).unwrap()
    }

    fn elem(l: &SubgroupLattice, cycles: &str) -> ElementId {
        let g = l.group();
        let p = crate::group::Permutation::parse_cycles(g.degree(), cycles).unwrap();
        g.index_of(&p).unwrap()
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let l = lattice("Zn:1");
        assert_eq!(l.len(), 1);
        assert_eq!(l.trivial(), l.whole());
    }

    #[test]
    fn d8_center_and_centralizers() {
        let l = lattice("D8");
        let z = l.center(l.whole());
        assert_eq!(l.order(z), 2);
        assert!(l.contains_element(z, elem(&l, "(0 2)(1 3)")));
        let v4 = l.generated_subgroup(&[elem(&l, "(0 2)"), elem(&l, "(1 3)")]);
        assert_eq!(l.order(v4), 4);
        assert_eq!(l.centralizer(v4), v4);
    }

    #[test]
    fn s4_normal_klein_and_sylows() {
        let l = lattice("S4");
        let v4 = l.generated_subgroup(&[elem(&l, "(0 1)(2 3)"), elem(&l, "(0 2)(1 3)")]);
        assert_eq!(l.order(v4), 4);
        assert_eq!(l.normalizer(v4), l.whole());
        assert_eq!(l.p_core(l.whole(), 2), v4);
        let syl = l.sylow_p(2).unwrap();
        assert_eq!(syl.len(), 3);
        assert!(syl.iter().all(|&s| l.class_of(s) == l.class_of(syl[0])));
        assert!(matches!(l.sylow_p(5), Err(Error::PrimeDoesNotDivide { .. })));
    }

    #[test]
    fn omega1_center_examples() {
        let l = lattice("D8");
        let z4 = l.generated_subgroup(&[elem(&l, "(0 1 2 3)")]);
        let om = l.omega1_center(z4, 2).unwrap();
        assert_eq!(l.order(om), 2);
        assert_eq!(l.omega1_center(l.whole(), 2).unwrap(), l.center(l.whole()));
        assert!(matches!(
            lattice("S3").omega1_center(lattice("S3").whole(), 2),
            Err(Error::NotAPGroup { .. })
        ));
    }

    #[test]
    fn products() {
        let l = lattice("D8");
        let s = l.generated_subgroup(&[elem(&l, "(0 2)")]);
        let z = l.center(l.whole());
        let prod = l.product(s, z).unwrap();
        assert_eq!(l.order(prod), 4);
        assert!(l.is_elementary_abelian(prod, 2));
        let va = prod;
        let vb = l.generated_subgroup(&[elem(&l, "(0 1)(2 3)"), elem(&l, "(0 3)(1 2)")]);
        assert_eq!(l.product(va, vb).unwrap(), l.whole());
        assert_eq!(l.product(s, va).unwrap(), va);

        let s4 = lattice("S4");
        let a = s4.generated_subgroup(&[elem(&s4, "(0 1)")]);
        let b = s4.generated_subgroup(&[elem(&s4, "(1 2)")]);
        assert_eq!(s4.product(a, b), Err(Error::NotMutuallyNormalizing));
    }

    #[test]
    fn p_locals() {
        let s3 = lattice("S3");
        assert_eq!(s3.p_local_subgroups(3).unwrap(), vec![s3.whole()]);
        let d8 = lattice("D8");
        // every normalizer in D8 is V4 or D8
        let locals = d8.p_local_subgroups(2).unwrap();
        assert!(locals.contains(&d8.whole()));
    }

    #[test]
    fn cache_roundtrip() {
        let l = lattice("S4");
        let data = l.to_data();
        let json = serde_json::to_string(&data).unwrap();
        let back: LatticeData = serde_json::from_str(&json).unwrap();
        let g = builtin::resolve("S4").unwrap();
        let l2 = SubgroupLattice::from_data(g, &back).unwrap();
        assert_eq!(l2.len(), l.len());
        for h in l.ids() {
            assert_eq!(l.members(h), l2.members(h));
        }
        let other = builtin::resolve("D8").unwrap();
        assert!(SubgroupLattice::from_data(other, &back).is_err());
    }
}
