//! Invariants checked on random inputs drawn from the suite groups. Each
//! property returns the number of individual assertions it made.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use sclab_core::collections::{BaseKind, CollectionKind, LocalStructure};
use sclab_core::group::{p_part, SubgroupId, SubgroupLattice};
use sclab_core::topology::homology::boundary_matrix;
use sclab_core::topology::snf::{smith_form, IntMatrix};
use sclab_core::topology::{Avatar, HomologyProfile, SimplicialComplex, SubgroupPoset};

use super::{lattice, suite_pairs};

pub struct Fixture {
    pub name: &'static str,
    pub local: LocalStructure<'static>,
    pub collections: Vec<SubgroupPoset>,
}

impl Fixture {
    pub fn lattice(&self) -> &'static SubgroupLattice {
        self.local.lattice()
    }

    fn pick_p_subgroup(&self, i: usize) -> SubgroupId {
        let ps = self.local.p_subgroups();
        ps[i % ps.len()]
    }

    fn collection(&self, kind: CollectionKind) -> &SubgroupPoset {
        let i = CollectionKind::ALL.iter().position(|&k| k == kind).unwrap();
        &self.collections[i]
    }
}

/// One fixture per (group, prime) of the suite, built once per process.
pub fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        let mut built: Vec<(&str, &'static SubgroupLattice)> = Vec::new();
        for (name, p) in suite_pairs() {
            let l = match built.iter().find(|(n, _)| *n == name) {
                Some(&(_, l)) => l,
                None => {
                    let l: &'static SubgroupLattice = Box::leak(Box::new(lattice(name)));
                    built.push((name, l));
                    l
                }
            };
            let local = LocalStructure::new(l, p).unwrap();
            let collections = CollectionKind::ALL
                .iter()
                .map(|&k| SubgroupPoset::new(local.collection(k).unwrap().members))
                .collect();
            out.push(Fixture { name, local, collections });
        }
        out
    })
}

type Outcome = Result<usize, String>;

macro_rules! ensure {
    ($count:ident, $cond:expr, $($msg:tt)+) => {{
        $count += 1;
        if !$cond {
            return Err(format!($($msg)+));
        }
    }};
}

/// Both operators and every collection commute with conjugation.
pub fn operator_equivariance(f: &Fixture, i: usize, g: usize) -> Outcome {
    let l = f.lattice();
    let s = &f.local;
    let g = g % l.group().order();
    let h = f.pick_p_subgroup(i);
    let c = l.conjugate(h, g);
    let mut n = 0;
    let (th, tc) = (s.tilde_of(h).unwrap(), s.tilde_of(c).unwrap());
    ensure!(n, l.conjugate(th, g) == tc, "{}: tilde of a conjugate", f.name);
    let (hh, hc) = (s.hat_of(h).unwrap(), s.hat_of(c).unwrap());
    ensure!(n, l.conjugate(hh, g) == hc, "{}: hat of a conjugate", f.name);
    for (k, coll) in CollectionKind::ALL.iter().zip(&f.collections) {
        ensure!(n, coll.contains(h) == coll.contains(c), "{}: {k} not conjugation closed", f.name);
    }
    Ok(n)
}

/// A p-group normalizing a member of tilde-S is in tilde-S.
pub fn normal_overgroup_closure(f: &Fixture, i: usize) -> Outcome {
    let l = f.lattice();
    let ts = f.collection(CollectionKind::Tilde(BaseKind::S));
    let p = f.pick_p_subgroup(i);
    let mut n = 0;
    if !ts.contains(p) {
        return Ok(n);
    }
    for &q in f.local.p_subgroups() {
        if l.is_subgroup_of(p, q) && l.is_normal_in(p, q) {
            ensure!(n, ts.contains(q), "{}: normal overgroup leaves tilde-S", f.name);
        }
    }
    Ok(n)
}

/// `N_Q(P) ∈ hat-S` whenever `P < Q ∈ hat-S`.
pub fn normalizer_stays_distinguished(f: &Fixture, i: usize) -> Outcome {
    let l = f.lattice();
    let hs = f.collection(CollectionKind::Hat(BaseKind::S));
    let p = f.pick_p_subgroup(i);
    let mut n = 0;
    for &q in hs.members() {
        if l.is_proper_subgroup_of(p, q) {
            let nq = l.normalizer_in(q, p);
            ensure!(n, hs.contains(nq), "{}: N_Q(P) not distinguished", f.name);
        }
    }
    Ok(n)
}

/// `hat(P) ≤ tilde(P)`, hat collections lie in tilde ones, and with a single
/// class of order-p elements the hat collections equal the base ones.
pub fn hat_below_tilde(f: &Fixture, i: usize) -> Outcome {
    let l = f.lattice();
    let s = &f.local;
    let p = f.pick_p_subgroup(i);
    let mut n = 0;
    ensure!(
        n,
        l.is_subgroup_of(s.hat_of(p).unwrap(), s.tilde_of(p).unwrap()),
        "{}: hat(P) not in tilde(P)",
        f.name
    );
    for b in [BaseKind::A, BaseKind::S, BaseKind::B] {
        let (base, tilde, hat) = (
            f.collection(CollectionKind::Base(b)),
            f.collection(CollectionKind::Tilde(b)),
            f.collection(CollectionKind::Hat(b)),
        );
        ensure!(n, !hat.contains(p) || tilde.contains(p), "{}: hat-{b} not in tilde-{b}", f.name);
        if s.single_class_of_order_p() {
            ensure!(n, hat.contains(p) == base.contains(p), "{}: one class but hat-{b} != {b}", f.name);
        }
    }
    Ok(n)
}

/// A p-subgroup whose normalizer has full p-part is distinguished.
pub fn sylow_normalizer_distinguished(f: &Fixture, i: usize) -> Outcome {
    let l = f.lattice();
    let s = &f.local;
    let p = f.pick_p_subgroup(i);
    let mut n = 0;
    let full = p_part(l.group().order(), s.prime());
    if p_part(l.order(s.normalizer(p)), s.prime()) == full {
        ensure!(n, s.is_distinguished(p), "{}: Sylow-normalizing subgroup not distinguished", f.name);
    }
    ensure!(
        n,
        s.is_distinguished(p) == (s.hat_of(p).unwrap() != l.trivial()),
        "{}: distinguished disagrees with hat",
        f.name
    );
    Ok(n)
}

/// Rank over the rationals by exact Gaussian elimination.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<BigRational>> = m
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    let ncols = m.ncols;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone() * inv.clone();
                for c in col..ncols {
                    let delta = rows[rank][c].clone() * factor.clone();
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

const COMPLEX_CAP: usize = 400;

fn avatar_poset(f: &Fixture, kind: usize, avatar: usize, h: usize) -> (SubgroupPoset, SubgroupId) {
    let l = f.lattice();
    let coll = &f.collections[kind % f.collections.len()];
    let h = SubgroupId(h % l.len());
    let a = [Avatar::Above, Avatar::Fixed, Avatar::Centralizer][avatar % 3];
    (a.of(l, coll, h), h)
}

/// `∂∂ = 0`, Smith-form rank equals rational rank, and the Euler
/// characteristic matches the reduced Betti numbers.
pub fn chain_complex_algebra(f: &Fixture, kind: usize, avatar: usize, h: usize) -> Outcome {
    let l = f.lattice();
    let (poset, _) = avatar_poset(f, kind, avatar, h);
    let mut n = 0;
    let Ok(c) = SimplicialComplex::of_poset(l, &poset, COMPLEX_CAP) else {
        return Ok(n);
    };
    if c.is_empty() {
        return Ok(n);
    }
    let top = c.dimension() as usize;
    for k in 1..=top {
        let d = boundary_matrix(&c, k);
        ensure!(n, smith_form(&d).rank() == rational_rank(&d), "{}: SNF rank of d_{k}", f.name);
        if k < top {
            let dd = d.mul(&boundary_matrix(&c, k + 1)).expect("small entries");
            ensure!(n, dd.is_zero(), "{}: d_{k} d_{} != 0", f.name, k + 1);
        }
    }
    let profile = HomologyProfile::compute(&c);
    let reduced: i64 = profile
        .reduced_betti
        .iter()
        .enumerate()
        .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    ensure!(n, c.euler_characteristic() - 1 == reduced, "{}: Euler characteristic", f.name);
    ensure!(n, profile.euler_characteristic == c.euler_characteristic(), "{}: recorded Euler characteristic", f.name);
    Ok(n)
}

/// Conjugate posets have the same homology.
pub fn homology_conjugation_invariant(f: &Fixture, kind: usize, avatar: usize, h: usize, g: usize) -> Outcome {
    let l = f.lattice();
    let (poset, h) = avatar_poset(f, kind, avatar, h);
    let g = g % l.group().order();
    let (conj, _) = avatar_poset(f, kind, avatar, l.conjugate(h, g).0);
    let mut n = 0;
    ensure!(n, poset.len() == conj.len(), "{}: conjugate avatar sizes", f.name);
    let (Ok(a), Ok(b)) = (
        SimplicialComplex::of_poset(l, &poset, COMPLEX_CAP),
        SimplicialComplex::of_poset(l, &conj, COMPLEX_CAP),
    ) else {
        return Ok(n);
    };
    ensure!(n, a.f_vector() == b.f_vector(), "{}: conjugate f-vectors", f.name);
    ensure!(
        n,
        HomologyProfile::compute(&a).same_homology(&HomologyProfile::compute(&b)),
        "{}: conjugate homology",
        f.name
    );
    Ok(n)
}

/// Named property together with a driver taking random words.
pub type Property = fn(&Fixture, [usize; 4]) -> Outcome;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("operator_equivariance", |f, r| operator_equivariance(f, r[0], r[1])),
    ("normal_overgroup_closure", |f, r| normal_overgroup_closure(f, r[0])),
    ("normalizer_stays_distinguished", |f, r| normalizer_stays_distinguished(f, r[0])),
    ("hat_below_tilde", |f, r| hat_below_tilde(f, r[0])),
    ("sylow_normalizer_distinguished", |f, r| sylow_normalizer_distinguished(f, r[0])),
    ("chain_complex_algebra", |f, r| chain_complex_algebra(f, r[0], r[1], r[2])),
    ("homology_conjugation_invariant", |f, r| homology_conjugation_invariant(f, r[0], r[1], r[2], r[3])),
];

pub fn case_strategy() -> impl Strategy<Value = (usize, [usize; 4])> {
    (0..fixtures().len(), any::<[usize; 4]>())
}

/// Runs one property for `cases` random cases with a fixed seed and returns
/// the number of assertions made.
pub fn run_property(prop: Property, cases: u32) -> Result<usize, String> {
    let mut runner = TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    let counter = std::cell::Cell::new(0usize);
    runner
        .run(&case_strategy(), |(fi, words)| {
            let got = prop(&fixtures()[fi], words).map_err(TestCaseError::fail)?;
            counter.set(counter.get() + got);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(counter.get())
}
