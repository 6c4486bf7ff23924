use super::LocalStructure;
use crate::error::Result;
use crate::group::{ElementId, Permutation, PermutationGroup, SubgroupId, SubgroupLattice};
use crate::Limits;

/// `N_G(P) / P·C_G(P)` realized as the permutation action of `N_G(P)` on
/// left cosets of `P·C_G(P)`.
pub(crate) fn quotient_group(s: &LocalStructure<'_>, h: SubgroupId) -> Result<PermutationGroup> {
    let lattice = s.lattice();
    let g = lattice.group();
    let n = s.normalizer(h);
    let k = lattice.product(h, s.centralizer(h))?;

    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps: Vec<ElementId> = Vec::new();
    for x in lattice.members(n).ones() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for y in lattice.members(k).ones() {
            coset_of[g.mul(x, y)] = id;
        }
    }
    let degree = reps.len();
    let gens = lattice
        .subgroup(n)
        .generators()
        .iter()
        .map(|&a| {
            let images = reps
                .iter()
                .map(|&r| coset_of[g.mul(a, r)] as u32)
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::from_generators(degree, gens)
}

pub(super) fn quotient_core_is_trivial(s: &LocalStructure<'_>, h: SubgroupId) -> Result<bool> {
    let q = quotient_group(s, h)?;
    if q.order() % s.prime() as usize != 0 {
        return Ok(true);
    }
    let ql = SubgroupLattice::enumerate(q, &Limits::default())?;
    Ok(ql.p_core(ql.whole(), s.prime()) == ql.trivial())
}
