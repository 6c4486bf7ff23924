//! Named groups addressable as `builtin:<NAME>`.

use super::perm_group::PermutationGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Names accepted by [`resolve`] (parametrized families take `:<n>`).
pub const NAMES: &[&str] = &[
    "D8", "Q8", "S3", "S4", "A4", "D12", "A5", "S5", "SL23", "Zn:<n>", "Sym:<n>", "Alt:<n>",
    "Dih:<order>",
];

pub fn resolve(name: &str) -> Result<PermutationGroup> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let group = match name {
        "D8" => dihedral(8)?,
        "D12" => dihedral(12)?,
        "Q8" => quaternion()?,
        "S3" => symmetric(3)?,
        "S4" => symmetric(4)?,
        "S5" => symmetric(5)?,
        "A4" => alternating(4)?,
        "A5" => alternating(5)?,
        "SL23" => sl2_3()?,
        _ => {
            let (family, arg) = name.split_once(':').ok_or_else(unknown)?;
            let n: usize = arg.parse().map_err(|_| unknown())?;
            match family {
                "Zn" if n >= 1 => cyclic(n)?,
                "Sym" if n >= 1 => symmetric(n)?,
                "Alt" if n >= 1 => alternating(n)?,
                "Dih" if n >= 6 && n % 2 == 0 => dihedral(n)?,
                _ => return Err(unknown()),
            }
        }
    };
    Ok(group.named(name))
}

fn cycle(degree: usize, points: &[u32]) -> Result<Permutation> {
    Permutation::from_cycles(degree, &[points.to_vec()])
}

pub fn cyclic(n: usize) -> Result<PermutationGroup> {
    let points: Vec<u32> = (0..n as u32).collect();
    PermutationGroup::from_generators(n, vec![cycle(n, &points)?])
}

pub fn symmetric(n: usize) -> Result<PermutationGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1])?);
        gens.push(cycle(n, &(0..n as u32).collect::<Vec<_>>())?);
    }
    PermutationGroup::from_generators(n, gens)
}

pub fn alternating(n: usize) -> Result<PermutationGroup> {
    let gens = (2..n as u32)
        .map(|i| cycle(n, &[0, 1, i]))
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::from_generators(n, gens)
}

/// Dihedral group of the given order `2m`, acting on `m` points. For
/// order 8 this is `⟨(0 1 2 3), (0 2)⟩`.
pub fn dihedral(order: usize) -> Result<PermutationGroup> {
    let m = order / 2;
    let rotation = cycle(m, &(0..m as u32).collect::<Vec<_>>())?;
    let reflection = Permutation::from_images(
        (0..m).map(|i| ((2 * m + 2 - i) % m) as u32).collect(),
    )?;
    PermutationGroup::from_generators(m, vec![rotation, reflection])
}

/// Q₈ in its regular representation; points are `1, −1, i, −i, j, −j, k, −k`.
pub fn quaternion() -> Result<PermutationGroup> {
    let i = Permutation::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4])?;
    let j = Permutation::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3])?;
    PermutationGroup::from_generators(8, vec![i, j])
}

/// SL(2,3) acting on the eight nonzero vectors of F₃².
pub fn sl2_3() -> Result<PermutationGroup> {
    let vectors: Vec<(u32, u32)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u32; 2]; 2]| -> Result<Permutation> {
        let images = vectors
            .iter()
            .map(|&(a, b)| {
                let image = ((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3);
                vectors.iter().position(|&v| v == image).unwrap() as u32
            })
            .collect();
        Permutation::from_images(images)
    };
    PermutationGroup::from_generators(8, vec![act([[1, 1], [0, 1]])?, act([[1, 0], [1, 1]])?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (name, order) in [
            ("D8", 8),
            ("Q8", 8),
            ("S3", 6),
            ("S4", 24),
            ("A4", 12),
            ("D12", 12),
            ("A5", 60),
            ("S5", 120),
            ("SL23", 24),
            ("Zn:1", 1),
            ("Zn:5", 5),
            ("Sym:3", 6),
            ("Alt:4", 12),
            ("Dih:10", 10),
        ] {
            assert_eq!(resolve(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn d8_generators_match_convention() {
        let g = resolve("D8").unwrap();
        let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
        assert_eq!(gens, vec!["(0 1 2 3)", "(0 2)"]);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let g = resolve("Q8").unwrap();
        assert!(!g.is_abelian());
        let involutions = (0..8).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn unknown_names() {
        for name in ["D9", "Zn:x", "Dih:7", "foo"] {
            assert!(matches!(resolve(name), Err(Error::UnknownBuiltin(_))), "{name}");
        }
    }
}
