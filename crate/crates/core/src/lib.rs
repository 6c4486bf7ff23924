//! Collections of p-subgroups of finite permutation groups, their order
//! complexes, and machine-checked homotopy certificates relating them.

pub mod collections;
pub mod error;
pub mod group;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};

/// Size bounds shared by every stage of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroups: usize,
    pub max_simplices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: group::DEFAULT_MAX_ORDER,
            max_subgroups: 50_000,
            max_simplices: 500_000,
        }
    }
}
