//! Smith normal form of sparse integer matrices.
//!
//! Elimination starts with unit pivots in checked `i64` arithmetic, which
//! settles almost every boundary matrix of an order complex. Whatever remains
//! (or anything that would overflow) is finished densely over `BigInt`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Column-major sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub nrows: usize,
    pub ncols: usize,
    /// `cols[c]` holds `(row, value)` pairs with nonzero values.
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.cols[c].push((r, v));
                }
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] += v;
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// `self · other`, or `None` on overflow.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.nrows, other.ncols);
        for (c, col) in other.cols.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, b) in col {
                for &(r, a) in &self.cols[k] {
                    let e = acc.entry(r).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            out.cols[c] = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|&(_, v)| v == 0))
    }
}

/// Nonzero invariant factors of an integer matrix, in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigUint>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

struct Sparse {
    rows: Vec<BTreeMap<usize, i64>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Sparse {
    fn new(m: &IntMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.nrows];
        let mut cols = vec![BTreeSet::new(); m.ncols];
        for (c, col) in m.cols.iter().enumerate() {
            for &(r, v) in col {
                if v != 0 {
                    *rows[r].entry(c).or_insert(0) += v;
                    cols[c].insert(r);
                }
            }
        }
        Self { rows, cols }
    }

    /// Eliminates column `c` using the unit entry at `(r, c)`. Returns `false`
    /// and leaves the matrix unchanged if some update would overflow.
    fn pivot(&mut self, r: usize, c: usize) -> bool {
        let unit = self.rows[r][&c];
        let pivot_row: Vec<(usize, i64)> = self.rows[r].iter().map(|(&k, &v)| (k, v)).collect();
        let others: Vec<usize> = self.cols[c].iter().copied().filter(|&x| x != r).collect();
        let mut updates: Vec<(usize, Vec<(usize, i64)>)> = Vec::with_capacity(others.len());
        for &o in &others {
            let factor = match self.rows[o][&c].checked_mul(unit) {
                Some(f) => f,
                None => return false,
            };
            let mut changed = Vec::with_capacity(pivot_row.len());
            for &(k, v) in &pivot_row {
                let cur = self.rows[o].get(&k).copied().unwrap_or(0);
                let new = match factor.checked_mul(v).and_then(|fv| cur.checked_sub(fv)) {
                    Some(x) => x,
                    None => return false,
                };
                changed.push((k, new));
            }
            updates.push((o, changed));
        }
        for (o, changed) in updates {
            for (k, new) in changed {
                if new == 0 {
                    self.rows[o].remove(&k);
                    self.cols[k].remove(&o);
                } else {
                    self.rows[o].insert(k, new);
                    self.cols[k].insert(o);
                }
            }
        }
        for &(k, _) in &pivot_row {
            self.cols[k].remove(&r);
        }
        self.rows[r].clear();
        true
    }
}

/// Smith normal form invariant factors of `m`.
pub fn smith_form(m: &IntMatrix) -> SmithForm {
    let mut sp = Sparse::new(m);
    let mut unit_pivots = 0usize;
    loop {
        let mut progress = false;
        for c in 0..sp.cols.len() {
            if sp.cols[c].is_empty() {
                continue;
            }
            let candidate = sp.cols[c]
                .iter()
                .copied()
                .filter(|&r| sp.rows[r][&c].abs() == 1)
                .min_by_key(|&r| sp.rows[r].len());
            if let Some(r) = candidate {
                if sp.pivot(r, c) {
                    unit_pivots += 1;
                    progress = true;
                }
            }
        }
        if !progress {
            break;
        }
    }

    let live_rows: Vec<usize> = (0..sp.rows.len()).filter(|&r| !sp.rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..sp.cols.len()).filter(|&c| !sp.cols[c].is_empty()).collect();
    let mut factors: Vec<BigUint> = vec![BigUint::one(); unit_pivots];
    if !live_rows.is_empty() {
        let mut dense: Vec<Vec<BigInt>> = live_rows
            .iter()
            .map(|&r| {
                live_cols
                    .iter()
                    .map(|c| BigInt::from(sp.rows[r].get(c).copied().unwrap_or(0)))
                    .collect()
            })
            .collect();
        factors.extend(dense_smith(&mut dense));
    }
    factors.sort();
    SmithForm {
        invariant_factors: factors,
    }
}

/// Invariant factors of a dense matrix, destroying it in the process.
pub fn dense_smith(a: &mut [Vec<BigInt>]) -> Vec<BigUint> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0usize;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                    a.swap(t, i);
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..nrows {
                    let delta = &q * &a[i][t];
                    a[i][j] -= delta;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the block; otherwise fold in a row.
            let mut offender = None;
            'scan: for i in t + 1..nrows {
                for j in t + 1..ncols {
                    if !a[i][j].is_multiple_of(&a[t][t]) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in t..ncols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs().to_biguint().expect("absolute value"));
        t += 1;
    }
    out
}

/// Rank over `F_p` by sparse Gaussian elimination.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let p = p as i64;
    let norm = |v: i64| v.rem_euclid(p);
    let mut rows: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); m.nrows];
    for (c, col) in m.cols.iter().enumerate() {
        for &(r, v) in col {
            let e = rows[r].entry(c).or_insert(0);
            *e = norm(*e + norm(v));
        }
    }
    for row in &mut rows {
        row.retain(|_, v| *v != 0);
    }
    let inv = |a: i64| -> i64 {
        let mut result = 1i64;
        let (mut base, mut e) = (a, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    };
    // Pivot rows keyed by leading column.
    let mut pivots: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
    for mut row in rows {
        while let Some((&lead, &lv)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(prow) => {
                    let f = lv * inv(prow[&lead]) % p;
                    for (&k, &v) in prow {
                        let e = row.entry(k).or_insert(0);
                        *e = norm(*e - f * v % p);
                        if *e == 0 {
                            row.remove(&k);
                        }
                    }
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<u64> {
        smith_form(&IntMatrix::from_dense(rows))
            .invariant_factors
            .iter()
            .map(|d| u64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn known_smith_forms() {
        assert_eq!(factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(factors(&[vec![1, 1], vec![1, 1]]), vec![1]);
    }

    #[test]
    fn real_projective_plane_torsion() {
        // Boundary of the 2-cell of RP^2 in a minimal CW model.
        assert_eq!(factors(&[vec![2]]), vec![2]);
    }

    #[test]
    fn rank_mod_p_sees_torsion() {
        let m = IntMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn product_and_zero() {
        let a = IntMatrix::from_dense(&[vec![1, -1]]);
        let b = IntMatrix::from_dense(&[vec![1], vec![1]]);
        assert!(a.mul(&b).unwrap().is_zero());
    }
}
