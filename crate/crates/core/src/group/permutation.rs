use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, …, n-1}` stored by its images.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on {n} points"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} out of range for degree {degree}"
                    )));
                }
                if touched[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} appears in more than one cycle"
                    )));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(0 1 2 3)(4 5)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let cycles = parse_cycle_list(text).map_err(|(column, message)| Error::Parse {
            line: 1,
            column,
            message,
        })?;
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Self { images }
    }

    pub fn order(&self) -> usize {
        let mut result = 1usize;
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            result = num_integer::lcm(result, len);
        }
        result
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Returns the cycles, or a 1-based column and message on failure.
pub(crate) fn parse_cycle_list(text: &str) -> std::result::Result<Vec<Vec<u32>>, (usize, String)> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<u32>> = None;
    let mut number = String::new();
    let mut number_start = 0;
    let flush = |number: &mut String, current: &mut Option<Vec<u32>>, col: usize| {
        if number.is_empty() {
            return Ok(());
        }
        let value: u32 = number
            .parse()
            .map_err(|_| (col, format!("invalid point `{number}`")))?;
        number.clear();
        match current {
            Some(c) => {
                c.push(value);
                Ok(())
            }
            None => Err((col, "point outside of a cycle".to_string())),
        }
    };
    for (i, ch) in text.char_indices() {
        let col = i + 1;
        match ch {
            '(' => {
                if current.is_some() {
                    return Err((col, "nested `(`".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut number, &mut current, number_start)?;
                match current.take() {
                    Some(c) => {
                        if c.len() > 1 {
                            cycles.push(c);
                        }
                    }
                    None => return Err((col, "unmatched `)`".into())),
                }
            }
            '0'..='9' => {
                if number.is_empty() {
                    number_start = col;
                }
                number.push(ch);
            }
            ' ' | '\t' | ',' => flush(&mut number, &mut current, number_start)?,
            other => return Err((col, format!("unexpected character `{other}`"))),
        }
    }
    if current.is_some() {
        return Err((text.len() + 1, "unterminated cycle".into()));
    }
    if !number.is_empty() {
        return Err((number_start, "point outside of a cycle".into()));
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip_display() {
        let p = Permutation::parse_cycles(6, "(0 1 2 3)(4 5)").unwrap();
        assert_eq!(p.to_string(), "(0 1 2 3)(4 5)");
        assert_eq!(p.order(), 4);
        assert_eq!(Permutation::parse_cycles(3, "()").unwrap(), Permutation::identity(3));
    }

    #[test]
    fn compose_is_right_to_left() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        // b first: 1 -> 2 -> 2, then a leaves 2.
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(3));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles(3, "(0 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 1").is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }
}
