use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;
use super::snf::{rank_mod_p, smith_form, IntMatrix};

/// Boundary map `∂_k : C_k → C_{k-1}` for `k ≥ 1`, rows indexed by
/// `(k-1)`-simplices and columns by `k`-simplices.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> IntMatrix {
    assert!(k >= 1, "boundary_matrix needs k >= 1");
    let index = c.level_index(k - 1);
    let mut m = IntMatrix::zeros(c.simplices(k - 1).len(), c.simplices(k).len());
    for (j, s) in c.simplices(k).iter().enumerate() {
        let mut face: Vec<u32> = Vec::with_capacity(s.len() - 1);
        for i in 0..s.len() {
            face.clear();
            face.extend(s.iter().enumerate().filter(|&(x, _)| x != i).map(|(_, &v)| v));
            let r = index[face.as_slice()];
            m.cols[j].push((r, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

/// Augmentation `C_0 → Z` as a `1 × n₀` matrix, the boundary in degree 0 of
/// the augmented chain complex.
fn augmentation(c: &SimplicialComplex) -> IntMatrix {
    let mut m = IntMatrix::zeros(1, c.simplices(0).len());
    for col in &mut m.cols {
        col.push((0, 1));
    }
    m
}

/// Reduced integral homology of a finite complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// True for the empty complex, whose only reduced group is `H̃_{-1} = Z`.
    pub empty: bool,
    pub dimension: isize,
    /// `reduced_betti[k]` is the free rank of `H̃_k` for `0 ≤ k ≤ dimension`.
    pub reduced_betti: Vec<usize>,
    /// Torsion coefficients of `H̃_k` (each greater than one).
    pub torsion: Vec<Vec<BigUint>>,
    pub euler_characteristic: i64,
}

impl HomologyProfile {
    pub fn compute(c: &SimplicialComplex) -> Self {
        if c.is_empty() {
            return Self {
                empty: true,
                dimension: -1,
                reduced_betti: Vec::new(),
                torsion: Vec::new(),
                euler_characteristic: 0,
            };
        }
        let top = c.dimension() as usize;
        // forms[k] is the Smith form of ∂_k, with ∂_0 the augmentation.
        let forms: Vec<_> = (0..=top)
            .map(|k| {
                let m = if k == 0 { augmentation(c) } else { boundary_matrix(c, k) };
                smith_form(&m)
            })
            .collect();
        let mut reduced_betti = Vec::with_capacity(top + 1);
        let mut torsion = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let cycles = c.simplices(k).len() - forms[k].rank();
            let (boundaries, tors) = match forms.get(k + 1) {
                Some(f) => (f.rank(), f.torsion()),
                None => (0, Vec::new()),
            };
            reduced_betti.push(cycles - boundaries);
            torsion.push(tors);
        }
        Self {
            empty: false,
            dimension: top as isize,
            reduced_betti,
            torsion,
            euler_characteristic: c.euler_characteristic(),
        }
    }

    /// All reduced groups vanish (never true for the empty complex).
    pub fn is_acyclic(&self) -> bool {
        !self.empty
            && self.reduced_betti.iter().all(|&b| b == 0)
            && self.torsion.iter().all(Vec::is_empty)
    }

    fn normalized(&self) -> (bool, Vec<usize>, Vec<Vec<BigUint>>) {
        let mut betti = self.reduced_betti.clone();
        let mut torsion = self.torsion.clone();
        while betti.len() > torsion.len() {
            torsion.push(Vec::new());
        }
        while let (Some(0), Some(t)) = (betti.last(), torsion.last()) {
            if !t.is_empty() {
                break;
            }
            betti.pop();
            torsion.pop();
        }
        (self.empty, betti, torsion)
    }

    /// Equality of reduced homology in all degrees, ignoring the dimension.
    pub fn same_homology(&self, other: &HomologyProfile) -> bool {
        self.normalized() == other.normalized()
    }

    /// Compact description such as `[0, Z^2 + Z/2]`.
    pub fn summary(&self) -> String {
        if self.empty {
            return "empty".to_string();
        }
        let parts: Vec<String> = self
            .reduced_betti
            .iter()
            .zip(&self.torsion)
            .map(|(&b, t)| {
                let mut terms = Vec::new();
                match b {
                    0 => {}
                    1 => terms.push("Z".to_string()),
                    _ => terms.push(format!("Z^{b}")),
                }
                terms.extend(t.iter().map(|d| format!("Z/{d}")));
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join(" + ")
                }
            })
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Reduced Betti numbers with `F_p` coefficients, from ranks mod `p`.
pub fn reduced_betti_mod_p(c: &SimplicialComplex, p: u64) -> Vec<usize> {
    if c.is_empty() {
        return Vec::new();
    }
    let top = c.dimension() as usize;
    let ranks: Vec<usize> = (0..=top)
        .map(|k| {
            let m = if k == 0 { augmentation(c) } else { boundary_matrix(c, k) };
            rank_mod_p(&m, p)
        })
        .collect();
    (0..=top)
        .map(|k| c.simplices(k).len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// Checks `∂_{k} ∘ ∂_{k+1} = 0` in every degree.
pub fn boundary_squares_to_zero(c: &SimplicialComplex) -> bool {
    let top = c.dimension();
    (1..top.max(0) as usize).all(|k| {
        boundary_matrix(c, k)
            .mul(&boundary_matrix(c, k + 1))
            .is_some_and(|m| m.is_zero())
    })
}
