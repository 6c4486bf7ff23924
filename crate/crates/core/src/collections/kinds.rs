use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::LocalStructure;
use crate::error::{Error, Result};
use crate::group::{SubgroupId, SubgroupLattice};

/// The three standard collections that carry tilde and hat variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseKind {
    /// Nontrivial elementary abelian p-subgroups.
    A,
    /// Nontrivial p-subgroups.
    S,
    /// Nontrivial p-radical subgroups.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CollectionKind {
    Base(BaseKind),
    /// p-centric subgroups.
    Ce,
    /// p-centric and p-radical subgroups.
    Bcen,
    /// Principal p-radical subgroups.
    D,
    /// Elementary abelian subgroups contained in `E₁(G)`.
    Benson,
    Tilde(BaseKind),
    Hat(BaseKind),
}

impl CollectionKind {
    pub const ALL: [CollectionKind; 13] = [
        CollectionKind::Base(BaseKind::A),
        CollectionKind::Base(BaseKind::S),
        CollectionKind::Base(BaseKind::B),
        CollectionKind::Ce,
        CollectionKind::Bcen,
        CollectionKind::D,
        CollectionKind::Benson,
        CollectionKind::Tilde(BaseKind::A),
        CollectionKind::Tilde(BaseKind::S),
        CollectionKind::Tilde(BaseKind::B),
        CollectionKind::Hat(BaseKind::A),
        CollectionKind::Hat(BaseKind::S),
        CollectionKind::Hat(BaseKind::B),
    ];
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseKind::A => "A",
            BaseKind::S => "S",
            BaseKind::B => "B",
        })
    }
}

impl fmt::Display for CollectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CollectionKind::Base(b) => write!(f, "{b}"),
            CollectionKind::Ce => f.write_str("Ce"),
            CollectionKind::Bcen => f.write_str("Bcen"),
            CollectionKind::D => f.write_str("D"),
            CollectionKind::Benson => f.write_str("E"),
            CollectionKind::Tilde(b) => write!(f, "tilde-{b}"),
            CollectionKind::Hat(b) => write!(f, "hat-{b}"),
        }
    }
}

impl FromStr for CollectionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CollectionKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown collection kind `{s}`"),
            })
    }
}

impl Serialize for CollectionKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A conjugation-closed set of nontrivial p-subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collection {
    pub kind: CollectionKind,
    pub prime: u64,
    /// Sorted lattice indices.
    pub members: Vec<SubgroupId>,
}

impl Collection {
    pub fn contains(&self, h: SubgroupId) -> bool {
        self.members.binary_search(&h).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset_of(&self, other: &Collection) -> bool {
        self.members.iter().all(|&h| other.contains(h))
    }

    /// Members missing from `other`.
    pub fn difference(&self, other: &Collection) -> Vec<SubgroupId> {
        self.members
            .iter()
            .copied()
            .filter(|&h| !other.contains(h))
            .collect()
    }

    pub fn is_conjugation_closed(&self, lattice: &SubgroupLattice) -> bool {
        let gens = lattice.group().generator_ids();
        self.members
            .iter()
            .all(|&h| gens.iter().all(|&g| self.contains(lattice.conjugate(h, g))))
    }

    pub fn to_json(&self, lattice: &SubgroupLattice) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "prime": self.prime,
            "members": self.members.iter().map(|&h| serde_json::json!({
                "index": h.0,
                "order": lattice.order(h),
                "generators": lattice.describe(h),
            })).collect::<Vec<_>>(),
        })
    }
}

pub(super) fn build(s: &LocalStructure<'_>, kind: CollectionKind) -> Result<Collection> {
    let lattice = s.lattice();
    let p = s.prime();
    let trivial = lattice.trivial();
    let base = |b: BaseKind, h: SubgroupId| match b {
        BaseKind::A => lattice.is_elementary_abelian(h, p),
        BaseKind::S => true,
        BaseKind::B => s.is_p_radical(h),
    };
    let mut members = Vec::new();
    for &h in s.p_subgroups() {
        let keep = match kind {
            CollectionKind::Base(b) => base(b, h),
            CollectionKind::Ce => s.is_p_centric(h),
            CollectionKind::Bcen => s.is_p_centric(h) && s.is_p_radical(h),
            CollectionKind::D => s.is_principal_p_radical(h)?,
            CollectionKind::Benson => {
                lattice.is_elementary_abelian(h, p)
                    && lattice
                        .members(h)
                        .ones()
                        .all(|x| x == crate::group::IDENTITY || s.in_e1(x))
            }
            CollectionKind::Tilde(b) => base(b, h) && s.tilde_of(h)? != trivial,
            CollectionKind::Hat(b) => base(b, h) && s.hat_of(h)? != trivial,
        };
        if keep {
            members.push(h);
        }
    }
    Ok(Collection {
        kind,
        prime: p,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;
    use crate::Limits;

    fn lattice(name: &str) -> SubgroupLattice {
        SubgroupLattice::enumerate(builtin::resolve(name).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn kind_names_roundtrip() {
        for k in CollectionKind::ALL {
            assert_eq!(k.to_string().parse::<CollectionKind>().unwrap(), k);
        }
    }

    #[test]
    fn d8_collections() {
        let l = lattice("D8");
        let s = LocalStructure::new(&l, 2).unwrap();
        let benson = s.collection(CollectionKind::Benson).unwrap();
        assert_eq!(benson.members, vec![l.center(l.whole())]);
        let ta = s.collection(CollectionKind::Tilde(BaseKind::A)).unwrap();
        assert_eq!(ta.len(), 3);
        let b = s.collection(CollectionKind::Base(BaseKind::B)).unwrap();
        assert_eq!(b.members, vec![l.whole()]);
        for k in CollectionKind::ALL {
            assert!(s.collection(k).unwrap().is_conjugation_closed(&l), "{k}");
        }
    }

    #[test]
    fn q8_hat_a_is_a_point() {
        let l = lattice("Q8");
        let s = LocalStructure::new(&l, 2).unwrap();
        let ha = s.collection(CollectionKind::Hat(BaseKind::A)).unwrap();
        assert_eq!(ha.members, vec![l.center(l.whole())]);
        let hb = s.collection(CollectionKind::Hat(BaseKind::B)).unwrap();
        assert_eq!(hb.members, vec![l.whole()]);
    }
}
