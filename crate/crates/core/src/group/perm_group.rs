use std::collections::{HashMap, VecDeque};

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Index of an element in the canonically ordered element list of a group.
pub type ElementId = usize;

/// The identity is always the first element in canonical order.
pub const IDENTITY: ElementId = 0;

/// Default bound on `|G|` for materialized groups.
pub const DEFAULT_MAX_ORDER: usize = 2000;

/// A finite permutation group with its full element table materialized.
///
/// Elements are sorted lexicographically by their image arrays, so the
/// identity has index 0 and every table is deterministic.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<ElementId>,
    elements: Vec<Permutation>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GroupSummary {
    pub name: Option<String>,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl PermutationGroup {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_MAX_ORDER)
    }

    pub fn with_cap(degree: usize, generators: Vec<Permutation>, max_order: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut elements = vec![identity.clone()];
        seen.insert(identity, ());
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&elements[i]);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    elements.push(next);
                    if elements.len() > max_order {
                        return Err(Error::CapExceeded {
                            what: "group order",
                            limit: max_order,
                            actual: elements.len(),
                        });
                    }
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        elements.sort();
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                mul[a * n + b] = index[&pa.compose(pb)] as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] as usize == IDENTITY {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let generator_ids = generators.iter().map(|g| index[g]).collect();
        Ok(Self {
            name: None,
            degree,
            generators,
            generator_ids,
            elements,
            mul,
            inv,
            orders,
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[ElementId] {
        &self.generator_ids
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, x: ElementId) -> &Permutation {
        &self.elements[x]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<ElementId> {
        self.elements.binary_search(p).ok()
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    #[inline]
    pub fn element_order(&self, x: ElementId) -> usize {
        self.orders[x] as usize
    }

    #[inline]
    pub fn commute(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_ids;
        g.iter().all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    /// Conjugacy classes of elements, each sorted, ordered by smallest member.
    pub fn element_classes(&self) -> Vec<Vec<ElementId>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..n {
                let y = self.conj(g, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// SHA-256 over the degree and the canonical element table.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.degree as u64).to_le_bytes());
        hasher.update((self.order() as u64).to_le_bytes());
        for p in &self.elements {
            for &i in p.images() {
                hasher.update(i.to_le_bytes());
            }
        }
        hex::encode(hasher.finalize())
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            name: self.name.clone(),
            degree: self.degree,
            order: self.order(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut n = n;
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

pub fn is_p_power(n: usize, p: u64) -> bool {
    p_part(n, p) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d8() -> PermutationGroup {
        PermutationGroup::from_generators(
            4,
            vec![
                Permutation::parse_cycles(4, "(0 1 2 3)").unwrap(),
                Permutation::parse_cycles(4, "(0 2)").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn d8_table() {
        let g = d8();
        assert_eq!(g.order(), 8);
        assert!(g.element(IDENTITY).is_identity());
        for a in 0..8 {
            assert_eq!(g.mul(a, g.inv(a)), IDENTITY);
            for b in 0..8 {
                assert_eq!(
                    g.element(g.mul(a, b)),
                    &g.element(a).compose(g.element(b))
                );
            }
        }
        assert!(!g.is_abelian());
        // {1}, {z}, two classes of reflections, {r, r^3}
        assert_eq!(g.element_classes().len(), 5);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![
            Permutation::parse_cycles(6, "(0 1 2 3 4 5)").unwrap(),
            Permutation::parse_cycles(6, "(0 1)").unwrap(),
        ];
        let err = PermutationGroup::with_cap(6, gens, 100).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn arithmetic_helpers() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && !is_prime(1) && !is_prime(9));
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_p_power(1, 3) && is_p_power(27, 3) && !is_p_power(6, 2));
    }
}
