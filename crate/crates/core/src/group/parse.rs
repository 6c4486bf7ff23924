//! Text format for permutation groups:
//!
//! ```text
//! # comment
//! degree 4
//! gen (0 1 2 3)
//! gen (0 2)
//! ```

use super::builtin;
use super::perm_group::PermutationGroup;
use super::permutation::{parse_cycle_list, Permutation};
use crate::error::{Error, Result};

pub const BUILTIN_PREFIX: &str = "builtin:";

/// Parses the group file format, capping the group order at `max_order`.
pub fn parse_group(text: &str, max_order: usize) -> Result<PermutationGroup> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let err = |column: usize, message: String| Error::Parse {
            line: line_no,
            column,
            message,
        };
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_offset = indent + keyword.len();
        match (keyword, degree) {
            ("degree", None) => {
                let value = rest.trim();
                let n: usize = value.parse().map_err(|_| {
                    err(rest_offset + 2, format!("expected a degree, found `{value}`"))
                })?;
                degree = Some(n);
            }
            ("degree", Some(_)) => return Err(err(indent + 1, "duplicate `degree` line".into())),
            (_, None) => {
                return Err(err(indent + 1, "the first line must be `degree <n>`".into()));
            }
            ("gen", Some(n)) => {
                let cycles = parse_cycle_list(rest)
                    .map_err(|(col, message)| err(rest_offset + col, message))?;
                let perm = Permutation::from_cycles(n, &cycles).map_err(|e| {
                    err(rest_offset + 1, e.to_string())
                })?;
                generators.push(perm);
            }
            (other, Some(_)) => {
                return Err(err(indent + 1, format!("unknown keyword `{other}`")));
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `degree` line".into(),
    })?;
    PermutationGroup::with_cap(degree, generators, max_order)
}

/// Resolves `builtin:NAME` or reads a group file from disk.
pub fn load_group(source: &str, max_order: usize) -> std::result::Result<PermutationGroup, LoadError> {
    if let Some(name) = source.strip_prefix(BUILTIN_PREFIX) {
        let g = builtin::resolve(name)?;
        if g.order() > max_order {
            return Err(Error::CapExceeded {
                what: "group order",
                limit: max_order,
                actual: g.order(),
            }
            .into());
        }
        return Ok(g);
    }
    let text = std::fs::read_to_string(source).map_err(|e| LoadError::Io {
        path: source.to_string(),
        message: e.to_string(),
    })?;
    let name = std::path::Path::new(source)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| source.to_string());
    Ok(parse_group(&text, max_order)?.named(name))
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Group(#[from] Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_MAX_ORDER;

    #[test]
    fn parses_with_comments() {
        let text = "# D8\n\ndegree 4\ngen (0 1 2 3)   # rotation\ngen (0 2)\n";
        let g = parse_group(text, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn single_three_cycle_is_z3() {
        let g = parse_group("degree 3\ngen (0 1 2)\n", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn reports_line_and_column() {
        match parse_group("degree 3\ngen (0 1 x)\n", DEFAULT_MAX_ORDER) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 10);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_group("gen (0 1)\n", DEFAULT_MAX_ORDER),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_group("degree 3\ngen (0 5)\n", DEFAULT_MAX_ORDER),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn builtins_resolve() {
        assert_eq!(load_group("builtin:D8", DEFAULT_MAX_ORDER).unwrap().order(), 8);
        assert_eq!(load_group("builtin:Q8", DEFAULT_MAX_ORDER).unwrap().order(), 8);
        assert!(matches!(
            load_group("builtin:nope", DEFAULT_MAX_ORDER),
            Err(LoadError::Group(Error::UnknownBuiltin(_)))
        ));
        assert!(matches!(
            load_group("builtin:S5", 100),
            Err(LoadError::Group(Error::CapExceeded { .. }))
        ));
    }
}
