use thiserror::Error;

/// Errors raised by the tiled-order routines.
///
/// Vertex and matrix indices carried by the variants are 1-based, matching
/// how orders and permutations are written outside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotSquare(row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("EmptyMatrix")]
    EmptyMatrix,

    #[error("NegativeEntry({i},{j})")]
    NegativeEntry { i: usize, j: usize },

    #[error("EntryTooLarge({i},{j})")]
    EntryTooLarge { i: usize, j: usize },

    #[error("NonzeroDiagonal({i})")]
    NonzeroDiagonal { i: usize },

    #[error("TriangleViolation({i},{j},{k})")]
    TriangleViolation { i: usize, j: usize, k: usize },

    #[error("index {index} out of range for n={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("integer overflow in exponent arithmetic")]
    Overflow,

    #[error("malformed permutation: {0}")]
    MalformedSyntax(String),

    #[error("permutation entry {value} out of range 1..={n}")]
    OutOfRange { value: i64, n: usize },

    #[error("permutation entry {0} repeated")]
    RepeatedElement(usize),

    #[error("n={n} exceeds the enumeration limit max_n={max_n}")]
    TooLarge { n: usize, max_n: usize },

    #[error("permutation is not an automorphism of the link graph")]
    NotQuiverAutomorphism,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
