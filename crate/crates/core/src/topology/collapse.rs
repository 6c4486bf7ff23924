use std::collections::HashSet;

use super::complex::{Simplex, SimplicialComplex};

/// Face indices (into level `k-1`) of every `k`-simplex.
fn face_table(c: &SimplicialComplex) -> Vec<Vec<Vec<usize>>> {
    let top = c.dimension().max(0) as usize;
    let mut table = vec![vec![Vec::new(); c.simplices(0).len()]];
    for k in 1..=top {
        let index = c.level_index(k - 1);
        table.push(
            c.simplices(k)
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|i| {
                            let face: Simplex = s
                                .iter()
                                .enumerate()
                                .filter(|&(j, _)| j != i)
                                .map(|(_, &v)| v)
                                .collect();
                            index[face.as_slice()]
                        })
                        .collect()
                })
                .collect(),
        );
    }
    table
}

/// A sequence of elementary collapses `(free face, the unique simplex containing it)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CollapseRun {
    pub pairs: Vec<(Simplex, Simplex)>,
    /// Simplices left when no free face remained.
    pub remaining: usize,
}

impl CollapseRun {
    pub fn reaches_point(&self) -> bool {
        self.remaining == 1
    }
}

/// Greedy elementary collapses until no free face is left.
pub fn greedy_collapse(c: &SimplicialComplex) -> CollapseRun {
    let faces = face_table(c);
    let levels = faces.len();
    let mut alive: Vec<Vec<bool>> = (0..levels).map(|k| vec![true; c.simplices(k).len()]).collect();
    let mut cofaces: Vec<Vec<u32>> = (0..levels).map(|k| vec![0; c.simplices(k).len()]).collect();
    let mut coface_lists: Vec<Vec<Vec<usize>>> =
        (0..levels).map(|k| vec![Vec::new(); c.simplices(k).len()]).collect();
    for k in 1..levels {
        for (t, fs) in faces[k].iter().enumerate() {
            for &f in fs {
                cofaces[k - 1][f] += 1;
                coface_lists[k - 1][f].push(t);
            }
        }
    }
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for k in 0..levels.saturating_sub(1) {
        for i in 0..cofaces[k].len() {
            if cofaces[k][i] == 1 {
                stack.push((k, i));
            }
        }
    }
    let mut pairs = Vec::new();
    let mut remaining = c.size();
    while let Some((k, i)) = stack.pop() {
        if !alive[k][i] || cofaces[k][i] != 1 {
            continue;
        }
        let t = coface_lists[k][i]
            .iter()
            .copied()
            .find(|&t| alive[k + 1][t])
            .expect("free face has a live coface");
        alive[k][i] = false;
        alive[k + 1][t] = false;
        remaining -= 2;
        pairs.push((c.simplices(k)[i].clone(), c.simplices(k + 1)[t].clone()));
        for &f in &faces[k + 1][t] {
            cofaces[k][f] -= 1;
            if alive[k][f] && cofaces[k][f] == 1 {
                stack.push((k, f));
            }
        }
        if k > 0 {
            for &f in &faces[k][i] {
                cofaces[k - 1][f] -= 1;
                if alive[k - 1][f] && cofaces[k - 1][f] == 1 {
                    stack.push((k - 1, f));
                }
            }
        }
    }
    CollapseRun { pairs, remaining }
}

/// Replays `pairs` on `c`, checking each step is an elementary collapse.
/// Returns the number of simplices left.
pub fn replay_collapses(c: &SimplicialComplex, pairs: &[(Simplex, Simplex)]) -> Result<usize, String> {
    let levels = (c.dimension() + 1) as usize;
    let mut alive: HashSet<Simplex> = (0..levels)
        .flat_map(|k| c.simplices(k).iter().cloned())
        .collect();
    for (step, (sigma, tau)) in pairs.iter().enumerate() {
        if !alive.contains(sigma) || !alive.contains(tau) {
            return Err(format!("step {step}: simplex already removed or absent"));
        }
        if tau.len() != sigma.len() + 1 || !sigma.iter().all(|v| tau.contains(v)) {
            return Err(format!("step {step}: {sigma:?} is not a facet of {tau:?}"));
        }
        // `σ` is free iff `τ` is its only live proper coface.
        let extra = alive
            .iter()
            .filter(|s| s.len() > sigma.len() && *s != tau && sigma.iter().all(|v| s.contains(v)))
            .count();
        if extra > 0 {
            return Err(format!("step {step}: {sigma:?} is not a free face"));
        }
        alive.remove(sigma);
        alive.remove(tau);
    }
    Ok(alive.len())
}
