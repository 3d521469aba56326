use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("partition {parts:?} has more than {max} nonzero parts")]
    TooManyParts { parts: Vec<usize>, max: usize },

    #[error("partition {parts:?} does not fit in a {rows} x {cols} box")]
    DoesNotFitBox {
        parts: Vec<usize>,
        rows: usize,
        cols: usize,
    },

    #[error("invalid strict tuple {tuple:?} for a {rows} x {cols} box")]
    InvalidStrictTuple {
        tuple: Vec<usize>,
        rows: usize,
        cols: usize,
    },

    #[error("polynomials in {left} and {right} variables cannot be combined")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("index ({i}, {j}) out of range for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid overlay: {0}")]
    InvalidOverlay(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("filling is not column strict")]
    NotColumnStrict,

    #[error("filling is not a semistandard tableau")]
    NotSemistandard,

    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutsideShape { row: usize, col: usize },

    #[error("invalid column tuples: {0}")]
    InvalidColumnTuple(String),

    #[error("branching needs n >= 2")]
    BranchingNeedsTwoRows,

    #[error(
        "candidate count mismatch at (i, j) = ({i}, {j}): found {found} candidate cells, expected {expected}"
    )]
    CandidateCountMismatch {
        i: usize,
        j: usize,
        found: usize,
        expected: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
