use thiserror::Error;

use crate::exactalg::Rational;

/// Errors raised while building or querying representations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series has non-unit constant term")]
    InvalidSeries,

    #[error("interpolation nodes are not pairwise distinct: {}", fmt_nodes(.nodes))]
    DegeneratePoints { nodes: Vec<Rational> },

    #[error("pyramid rows must be weakly increasing, got {rows:?}")]
    NotLeftJustified { rows: Vec<i64> },

    #[error("invalid pyramid row: {0}")]
    InvalidRow(String),

    #[error("weight grid shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dominance fails at (i={i}, k={k}): lambda_i - lambda_(i+1) is not a nonnegative integer")]
    NotDominant { i: usize, k: usize },

    #[error("generality fails: lambda at (i={i}, k={k}) and (j={j}, m={m}) differ by an integer")]
    NotGeneric { i: usize, k: usize, j: usize, m: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("top row entries of a pattern are fixed by the highest weight")]
    ImmutableTopRow,

    #[error("truncation order {order} too small, need at least {needed}")]
    TruncationTooSmall { order: usize, needed: usize },

    #[error("expected a polynomial, found a nonzero coefficient of u^{power}")]
    NonPolynomial { power: i64 },

    #[error("invalid branching weight: {0}")]
    InvalidBranchingWeight(String),

    #[error("operation requires the one-column pyramid (1,...,1)")]
    WrongPyramid,

    #[error("malformed input: {0}")]
    Input(String),
}

fn fmt_nodes(nodes: &[Rational]) -> String {
    nodes.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
