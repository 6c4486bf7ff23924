use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::SubgroupLattice;

use super::poset::SubgroupPoset;

pub type Simplex = Vec<u32>;

/// A finite abstract simplicial complex stored by dimension. Simplices are
/// sorted vertex lists; `simplices[k]` holds the `k`-simplices in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Simplex>>,
}

/// The order complex of a poset: vertices are members, simplices are chains.
pub type OrderComplex = SimplicialComplex;

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self {
            vertex_count: 0,
            simplices: Vec::new(),
        }
    }

    /// Downward closure of the given simplices. Vertices are `0..vertex_count`.
    pub fn from_simplices(vertex_count: usize, generators: &[Simplex]) -> Self {
        let mut by_dim: Vec<std::collections::BTreeSet<Simplex>> = Vec::new();
        for v in 0..vertex_count {
            insert_at(&mut by_dim, vec![v as u32]);
        }
        for g in generators {
            let mut s = g.clone();
            s.sort_unstable();
            s.dedup();
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                let face: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                insert_at(&mut by_dim, face);
            }
        }
        let vertex_count = vertex_count.max(
            by_dim
                .first()
                .and_then(|vs| vs.iter().next_back())
                .map_or(0, |v| v[0] as usize + 1),
        );
        Self {
            vertex_count,
            simplices: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// Chains of `poset` ordered by inclusion; vertex `i` is `poset.members()[i]`.
    pub fn of_poset(
        lattice: &SubgroupLattice,
        poset: &SubgroupPoset,
        max_simplices: usize,
    ) -> Result<Self> {
        let ups = poset.strict_up_sets(lattice);
        let mut simplices: Vec<Vec<Simplex>> = Vec::new();
        let mut count = 0usize;
        let mut chain: Vec<u32> = Vec::new();
        for start in 0..poset.len() as u32 {
            chain.push(start);
            extend_chains(&ups, &mut chain, &mut simplices, &mut count, max_simplices)?;
            chain.pop();
        }
        for level in &mut simplices {
            level.sort_unstable();
        }
        Ok(Self {
            vertex_count: poset.len(),
            simplices,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn size(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        s.len() >= 1 && self.simplices(s.len() - 1).binary_search_by(|x| x.as_slice().cmp(s)).is_ok()
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.simplices(s.len() - 1)
            .binary_search_by(|x| x.as_slice().cmp(s))
            .ok()
    }

    /// Simplices not contained in a larger simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: std::collections::HashSet<&[u32]> = std::collections::HashSet::new();
        let mut out = Vec::new();
        for k in (0..self.simplices.len()).rev() {
            for s in &self.simplices[k] {
                if !covered.contains(s.as_slice()) {
                    out.push(s.clone());
                }
            }
            if k > 0 {
                for s in &self.simplices[k] {
                    for i in 0..s.len() {
                        let face: Simplex = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                        if let Some(idx) = self.index_of(&face) {
                            covered.insert(self.simplices[k - 1][idx].as_slice());
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        out
    }

    /// Text export: one maximal simplex per line, vertices space-separated,
    /// using `label` to name vertices.
    pub fn export_maximal(&self, label: impl Fn(u32) -> String) -> String {
        let mut out = String::new();
        for s in self.maximal_simplices() {
            let names: Vec<String> = s.iter().map(|&v| label(v)).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out
    }

    /// Number of connected components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.vertex_count;
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0] as usize), find(&mut parent, e[1] as usize));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components
    }

    /// Position of each `k`-simplex within `simplices(k)`.
    pub(crate) fn level_index(&self, k: usize) -> HashMap<&[u32], usize> {
        self.simplices(k)
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect()
    }
}

fn insert_at(by_dim: &mut Vec<std::collections::BTreeSet<Simplex>>, s: Simplex) {
    let k = s.len() - 1;
    while by_dim.len() <= k {
        by_dim.push(Default::default());
    }
    by_dim[k].insert(s);
}

fn extend_chains(
    ups: &[Vec<u32>],
    chain: &mut Vec<u32>,
    simplices: &mut Vec<Vec<Simplex>>,
    count: &mut usize,
    cap: usize,
) -> Result<()> {
    *count += 1;
    if *count > cap {
        return Err(Error::CapExceeded {
            what: "order complex simplices",
            limit: cap,
            actual: *count,
        });
    }
    let k = chain.len() - 1;
    if simplices.len() <= k {
        simplices.push(Vec::new());
    }
    simplices[k].push(chain.clone());
    let last = *chain.last().expect("nonempty chain") as usize;
    for &next in &ups[last] {
        chain.push(next);
        extend_chains(ups, chain, simplices, count, cap)?;
        chain.pop();
    }
    Ok(())
}
