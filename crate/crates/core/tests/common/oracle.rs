//! Brute-force reference implementation for groups of order at most 64.
//!
//! Subgroups are bitmasks over element indices. Every notion is computed
//! straight from its definition, with no shared code beyond reading the
//! generators.

use sclab_core::collections::{BaseKind, CollectionKind, LocalStructure};
use sclab_core::group::{Permutation, SubgroupLattice};

pub struct Naive {
    n: usize,
    identity: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    elem_order: Vec<usize>,
    pub subgroups: Vec<u64>,
    p: u64,
    e0: u64,
    e1: u64,
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&j| a[j as usize]).collect()
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn is_power_of(mut k: usize, p: u64) -> bool {
    let p = p as usize;
    while k % p == 0 {
        k /= p;
    }
    k == 1
}

impl Naive {
    /// Builds the oracle from the generators of `lattice`'s group, indexing
    /// elements the way the engine does so masks can be compared.
    pub fn new(lattice: &SubgroupLattice, p: u64) -> Self {
        let group = lattice.group();
        let n = group.order();
        assert!(n <= 64, "the oracle handles orders up to 64");
        let degree = group.degree();
        let gens: Vec<Vec<u32>> = group.generators().iter().map(|g| g.images().to_vec()).collect();
        let id: Vec<u32> = (0..degree as u32).collect();
        let mut found = vec![id.clone()];
        let mut i = 0;
        while i < found.len() {
            for g in &gens {
                let x = compose(g, &found[i]);
                if !found.contains(&x) {
                    found.push(x);
                }
            }
            i += 1;
        }
        assert_eq!(found.len(), n, "closure of the generators has the wrong size");
        let index = |images: &[u32]| {
            group
                .index_of(&Permutation::from_images(images.to_vec()).unwrap())
                .expect("element known to the engine")
        };
        let mut elems = vec![Vec::new(); n];
        for x in found {
            let k = index(&x);
            elems[k] = x;
        }
        let lookup = |x: &[u32]| elems.iter().position(|e| e == x).unwrap();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| lookup(&compose(&elems[a], &elems[b]))).collect())
            .collect();
        let identity = lookup(&id);
        let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| mul[a][b] == identity).unwrap()).collect();
        let elem_order: Vec<usize> = (0..n)
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != identity {
                    x = mul[x][a];
                    k += 1;
                }
                k
            })
            .collect();
        let mut o = Naive {
            n,
            identity,
            mul,
            inv,
            elem_order,
            subgroups: Vec::new(),
            p,
            e0: 0,
            e1: 0,
        };
        o.subgroups = o.all_subgroups();
        o.e0 = o.central_type();
        o.e1 = o.close_e0();
        o
    }

    fn closure(&self, mask: u64) -> u64 {
        let mut m = mask | 1 << self.identity;
        loop {
            let mut next = m;
            for a in bits(m) {
                for b in bits(m) {
                    next |= 1 << self.mul[a][b];
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    }

    fn all_subgroups(&self) -> Vec<u64> {
        let mut out = vec![self.closure(0)];
        let mut i = 0;
        while i < out.len() {
            let h = out[i];
            for g in 0..self.n {
                if h >> g & 1 == 0 {
                    let k = self.closure(h | 1 << g);
                    if !out.contains(&k) {
                        out.push(k);
                    }
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    pub fn size(mask: u64) -> usize {
        mask.count_ones() as usize
    }

    fn is_p_group(&self, h: u64) -> bool {
        is_power_of(Self::size(h), self.p)
    }

    fn conj(&self, g: usize, h: u64) -> u64 {
        bits(h).fold(0, |acc, x| acc | 1 << self.mul[self.mul[g][x]][self.inv[g]])
    }

    fn commute(&self, a: usize, b: usize) -> bool {
        self.mul[a][b] == self.mul[b][a]
    }

    fn normalizer(&self, h: u64) -> u64 {
        (0..self.n).filter(|&g| self.conj(g, h) == h).fold(0, |acc, g| acc | 1 << g)
    }

    fn centralizer(&self, h: u64) -> u64 {
        (0..self.n)
            .filter(|&g| bits(h).all(|x| self.commute(g, x)))
            .fold(0, |acc, g| acc | 1 << g)
    }

    fn center(&self, h: u64) -> u64 {
        h & self.centralizer(h)
    }

    /// Largest normal p-subgroup of `x`, by inspecting all of them.
    fn op(&self, x: u64) -> u64 {
        self.subgroups
            .iter()
            .copied()
            .filter(|&k| k & !x == 0 && self.is_p_group(k))
            .filter(|&k| bits(x).all(|g| self.conj(g, k) == k))
            .max_by_key(|&k| Self::size(k))
            .unwrap()
    }

    fn sylow_order(&self) -> usize {
        let mut k = 1;
        while self.n % (k * self.p as usize) == 0 {
            k *= self.p as usize;
        }
        k
    }

    fn central_type(&self) -> u64 {
        let s = self.sylow_order();
        let mut out = 0;
        for &syl in self.subgroups.iter().filter(|&&h| Self::size(h) == s) {
            for x in bits(self.center(syl)) {
                if self.elem_order[x] == self.p as usize {
                    out |= 1 << x;
                }
            }
        }
        out
    }

    fn close_e0(&self) -> u64 {
        let mut m = self.e0;
        loop {
            let mut next = m;
            for x in bits(m) {
                for g in 0..self.n {
                    next |= 1 << self.mul[self.mul[g][x]][self.inv[g]];
                }
                for y in bits(m) {
                    let z = self.mul[x][y];
                    if self.commute(x, y) && self.elem_order[z] == self.p as usize {
                        next |= 1 << z;
                    }
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    }

    pub fn e0(&self) -> u64 {
        self.e0
    }

    pub fn e1(&self) -> u64 {
        self.e1
    }

    fn order_p_in_center(&self, h: u64) -> u64 {
        bits(self.center(h))
            .filter(|&x| self.elem_order[x] == self.p as usize)
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn tilde(&self, h: u64) -> u64 {
        self.order_p_in_center(h) & self.e1 | 1 << self.identity
    }

    pub fn hat(&self, h: u64) -> u64 {
        self.closure(self.order_p_in_center(h) & self.e0)
    }

    fn is_elementary_abelian(&self, h: u64) -> bool {
        self.center(h) == h && bits(h).all(|x| x == self.identity || self.elem_order[x] == self.p as usize)
    }

    fn is_radical(&self, r: u64) -> bool {
        self.op(self.normalizer(r)) == r
    }

    fn is_centric(&self, r: u64) -> bool {
        let c = self.centralizer(r);
        let mut part = 1;
        while Self::size(c) % (part * self.p as usize) == 0 {
            part *= self.p as usize;
        }
        Self::size(self.center(r)) == part
    }

    fn is_principal(&self, r: u64) -> bool {
        if !self.is_centric(r) {
            return false;
        }
        let n = self.normalizer(r);
        let c = self.centralizer(r);
        let m = bits(r)
            .flat_map(|a| bits(c).map(move |b| (a, b)))
            .fold(0u64, |acc, (a, b)| acc | 1 << self.mul[a][b]);
        !self.subgroups.iter().any(|&k| {
            k & !n == 0
                && m & !k == 0
                && k != m
                && is_power_of(Self::size(k) / Self::size(m), self.p)
                && bits(n).all(|g| self.conj(g, k) == k)
        })
    }

    fn base(&self, b: BaseKind, h: u64) -> bool {
        match b {
            BaseKind::A => self.is_elementary_abelian(h),
            BaseKind::S => true,
            BaseKind::B => self.is_radical(h),
        }
    }

    pub fn collection(&self, kind: CollectionKind) -> Vec<u64> {
        let trivial = 1u64 << self.identity;
        let mut out: Vec<u64> = self
            .subgroups
            .iter()
            .copied()
            .filter(|&h| h != trivial && self.is_p_group(h))
            .filter(|&h| match kind {
                CollectionKind::Base(b) => self.base(b, h),
                CollectionKind::Ce => self.is_centric(h),
                CollectionKind::Bcen => self.is_centric(h) && self.is_radical(h),
                CollectionKind::D => self.is_principal(h),
                CollectionKind::Benson => self.is_elementary_abelian(h) && h & !(self.e1 | trivial) == 0,
                CollectionKind::Tilde(b) => self.base(b, h) && self.tilde(h) != trivial,
                CollectionKind::Hat(b) => self.base(b, h) && self.hat(h) != trivial,
            })
            .collect();
        out.sort();
        out
    }
}

pub fn mask_of(lattice: &SubgroupLattice, h: sclab_core::group::SubgroupId) -> u64 {
    lattice.members(h).ones().fold(0, |acc, x| acc | 1 << x)
}

/// Outcome of comparing the engine with the oracle.
#[derive(Default)]
pub struct Agreement {
    pub checks: usize,
    pub disagreements: Vec<String>,
}

impl Agreement {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.disagreements.push(what());
        }
    }
}

/// Compares subgroup lists, central-type sets, the two operators and every
/// collection.
pub fn compare(lattice: &SubgroupLattice, p: u64) -> Agreement {
    let naive = Naive::new(lattice, p);
    let local = LocalStructure::new(lattice, p).unwrap();
    let mut a = Agreement::default();

    let mut engine: Vec<u64> = lattice.ids().map(|h| mask_of(lattice, h)).collect();
    engine.sort();
    a.check(engine == naive.subgroups, || {
        format!("subgroups: engine {} vs oracle {}", engine.len(), naive.subgroups.len())
    });

    let sets = local.central_type_sets();
    let e0 = sets.e0.iter().fold(0u64, |acc, &x| acc | 1 << x);
    let e1 = sets.e1.iter().fold(0u64, |acc, &x| acc | 1 << x);
    a.check(e0 == naive.e0(), || format!("E0: {e0:#x} vs {:#x}", naive.e0()));
    a.check(e1 == naive.e1(), || format!("E1: {e1:#x} vs {:#x}", naive.e1()));

    for &h in local.p_subgroups() {
        let m = mask_of(lattice, h);
        let t = mask_of(lattice, local.tilde_of(h).unwrap());
        let hh = mask_of(lattice, local.hat_of(h).unwrap());
        a.check(t == naive.tilde(m), || format!("tilde of {m:#x}"));
        a.check(hh == naive.hat(m), || format!("hat of {m:#x}"));
    }

    for kind in CollectionKind::ALL {
        let mut engine: Vec<u64> = local
            .collection(kind)
            .unwrap()
            .members
            .iter()
            .map(|&h| mask_of(lattice, h))
            .collect();
        engine.sort();
        let expected = naive.collection(kind);
        a.check(engine == expected, || {
            format!("{kind}: engine {} members vs oracle {}", engine.len(), expected.len())
        });
    }
    a
}
