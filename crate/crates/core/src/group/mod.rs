//! Permutation groups, their element tables and subgroup lattices.

pub mod builtin;
mod lattice;
mod parse;
mod perm_group;
mod permutation;

pub use lattice::{
    LatticeData, Subgroup, SubgroupData, SubgroupId, SubgroupLattice, LATTICE_FORMAT_VERSION,
};
pub use parse::{load_group, parse_group, LoadError, BUILTIN_PREFIX};
pub use perm_group::{
    is_p_power, is_prime, p_part, ElementId, GroupSummary, PermutationGroup, DEFAULT_MAX_ORDER,
    IDENTITY,
};
pub use permutation::Permutation;
