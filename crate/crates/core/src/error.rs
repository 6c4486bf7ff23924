use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} exceeds the configured cap ({actual} > {limit})")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("subgroup of order {order} is not a {p}-group")]
    NotAPGroup { order: usize, p: u64 },

    #[error("neither subgroup normalizes the other; the product set is not a subgroup")]
    NotMutuallyNormalizing,

    #[error("element set is not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),

    #[error("poset is not a subposet of the ambient poset (element {0} missing)")]
    NotASubposet(usize),

    #[error("cache format error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
