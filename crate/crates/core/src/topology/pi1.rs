//! Edge-path presentation of the fundamental group and Tietze simplification.

use super::complex::SimplicialComplex;

/// Generators are `1..=generators`; a letter `-g` is the inverse of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

/// Presentation of `π₁` at vertex 0 of a connected complex: one generator per
/// edge outside a BFS spanning tree, one relator per triangle.
pub fn edge_path_presentation(c: &SimplicialComplex) -> Presentation {
    let n = c.vertex_count();
    let edges = c.simplices(1);
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e[0] as usize].push((e[1] as usize, i));
        adjacency[e[1] as usize].push((e[0] as usize, i));
    }
    let mut in_tree = vec![false; edges.len()];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut letter = vec![0i32; edges.len()];
    let mut generators = 0usize;
    for (i, &t) in in_tree.iter().enumerate() {
        if !t {
            generators += 1;
            letter[i] = generators as i32;
        }
    }
    let index = c.level_index(1);
    let edge_letter = |a: u32, b: u32| -> i32 {
        // Oriented from smaller to larger vertex.
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        sign * letter[index[[lo, hi].as_slice()]]
    };
    let relators = c
        .simplices(2)
        .iter()
        .map(|t| {
            [edge_letter(t[0], t[1]), edge_letter(t[1], t[2]), edge_letter(t[2], t[0])]
                .into_iter()
                .filter(|&x| x != 0)
                .collect()
        })
        .collect();
    Presentation {
        generators,
        relators,
    }
}

fn free_reduce(word: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    // Cyclic reduction.
    let mut start = 0;
    let mut end = out.len();
    while end - start >= 2 && out[start] == -out[end - 1] {
        start += 1;
        end -= 1;
    }
    *word = out[start..end].to_vec();
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&x| -x).collect()
}

/// Outcome of bounded Tietze simplification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TietzeOutcome {
    pub trivial: bool,
    pub remaining: Presentation,
}

/// Repeatedly deletes a generator occurring exactly once in some relator,
/// substituting its solution elsewhere. The presentation is trivial iff
/// every generator gets eliminated. `max_length` bounds the total relator
/// length during substitution.
pub fn tietze_simplify(p: &Presentation, max_length: usize) -> TietzeOutcome {
    let mut relators: Vec<Vec<i32>> = p.relators.clone();
    let mut live: Vec<bool> = vec![true; p.generators + 1];
    live[0] = false;
    loop {
        for r in &mut relators {
            free_reduce(r);
        }
        relators.retain(|r| !r.is_empty());
        relators.sort_by_key(Vec::len);

        let mut choice: Option<(usize, i32)> = None;
        'search: for (ri, r) in relators.iter().enumerate() {
            for &x in r {
                let g = x.abs();
                if r.iter().filter(|&&y| y.abs() == g).count() == 1 {
                    choice = Some((ri, x));
                    break 'search;
                }
            }
        }
        let Some((ri, x)) = choice else { break };
        let r = relators.swap_remove(ri);
        let g = x.abs();
        let pos = r.iter().position(|&y| y == x).expect("letter present");
        // r = u x v  ⇒  x = u⁻¹ v⁻¹, rotated as x·(v u) = 1 ⇒ x = (v u)⁻¹.
        let mut rest: Vec<i32> = r[pos + 1..].to_vec();
        rest.extend_from_slice(&r[..pos]);
        let solution = if x > 0 { invert(&rest) } else { rest };
        let inverse_solution = invert(&solution);
        let total: usize = relators
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&y| if y.abs() == g { solution.len() } else { 1 })
                    .sum::<usize>()
            })
            .sum();
        if total > max_length {
            relators.push(r);
            break;
        }
        for w in &mut relators {
            if w.iter().any(|&y| y.abs() == g) {
                let mut out = Vec::with_capacity(w.len());
                for &y in w.iter() {
                    if y == g {
                        out.extend_from_slice(&solution);
                    } else if y == -g {
                        out.extend_from_slice(&inverse_solution);
                    } else {
                        out.push(y);
                    }
                }
                *w = out;
            }
        }
        live[g as usize] = false;
    }
    let generators = live.iter().filter(|&&b| b).count();
    TietzeOutcome {
        trivial: generators == 0,
        remaining: Presentation {
            generators,
            relators,
        },
    }
}

/// True when `π₁` of the (connected) complex is shown trivial within budget.
pub fn simply_connected(c: &SimplicialComplex, max_length: usize) -> bool {
    tietze_simplify(&edge_path_presentation(c), max_length).trivial
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_is_simply_connected() {
        let c = SimplicialComplex::from_simplices(3, &[vec![0, 1, 2]]);
        assert!(simply_connected(&c, 1000));
    }

    #[test]
    fn circle_is_not_shown_trivial() {
        let c = SimplicialComplex::from_simplices(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let p = edge_path_presentation(&c);
        assert_eq!(p.generators, 1);
        assert!(!tietze_simplify(&p, 1000).trivial);
    }

    #[test]
    fn sphere_is_simply_connected() {
        let c = SimplicialComplex::from_simplices(
            4,
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        );
        assert!(simply_connected(&c, 1000));
    }

    #[test]
    fn free_reduction_is_cyclic() {
        let mut w = vec![1, 2, -2, 3, -1];
        free_reduce(&mut w);
        assert_eq!(w, vec![3]);
    }
}
