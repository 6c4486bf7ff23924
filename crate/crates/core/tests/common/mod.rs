#![allow(dead_code)]

pub mod oracle;
pub mod props;

use sclab_core::group::{builtin, is_prime, PermutationGroup, SubgroupLattice};
use sclab_core::Limits;

/// Groups exercised by the acceptance run.
pub const SUITE: &[&str] = &[
    "D8", "Q8", "Zn:2", "Zn:3", "Zn:5", "S3", "S4", "A4", "D12", "SL23", "A5", "S5",
];

pub fn primes_dividing(n: usize) -> Vec<u64> {
    (2..=n as u64).filter(|&p| is_prime(p) && n as u64 % p == 0).collect()
}

pub fn group(name: &str) -> PermutationGroup {
    builtin::resolve(name).unwrap()
}

pub fn lattice(name: &str) -> SubgroupLattice {
    SubgroupLattice::enumerate(group(name), &Limits::default()).unwrap()
}

/// Every (group, prime) pair of the suite.
pub fn suite_pairs() -> Vec<(&'static str, u64)> {
    SUITE
        .iter()
        .flat_map(|&name| primes_dividing(group(name).order()).into_iter().map(move |p| (name, p)))
        .collect()
}
