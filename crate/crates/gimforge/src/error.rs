use thiserror::Error;

/// A single violated cell of the intersection-matrix axioms (indices are 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GimViolation {
    DiagonalNotTwo(usize),
    SignMismatch(usize, usize),
}

impl std::fmt::Display for GimViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GimViolation::DiagonalNotTwo(i) => write!(f, "DiagonalNotTwo({})", i + 1),
            GimViolation::SignMismatch(i, j) => write!(f, "SignMismatch({},{})", i + 1, j + 1),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("empty matrix")]
    Empty,
    #[error("not a generalized intersection matrix: {}", list(.0))]
    InvalidGim(Vec<GimViolation>),
    #[error("matrix is not symmetrizable (inconsistent ratio around a cycle through {0} and {1})")]
    NotSymmetrizable(usize, usize),
    #[error("reflection through an isotropic root")]
    IsotropicReflector,
    #[error("braid move ({i},{j}) produces a non-integer pairing ratio")]
    NonIntegerPairing { i: usize, j: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("basis roots are linearly dependent")]
    DependentRoots,
    #[error("anti-dominantization did not terminate within {0} steps")]
    NonTerminating(usize),
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is indefinite")]
    Indefinite,
    #[error("matrix is decomposable into blocks {0:?}")]
    Decomposable(Vec<Vec<usize>>),
    #[error("no Figure-1 template matches: {0}")]
    NoTemplateMatch(String),
    #[error("illegal modified Dynkin label: {0}")]
    IllegalLabel(String),
    #[error("matrix is not a finite-type Cartan matrix")]
    NotFiniteType,
    #[error("first simple root is not long")]
    FirstRootNotLong,
    #[error("expression height {height} exceeds degree cap {cap}")]
    HeightExceeded { height: usize, cap: usize },
    #[error("multidegree {0:?} was not computed in this truncation")]
    OutsideTruncation(Vec<u32>),
    #[error("parity invariant does not apply: coefficient m[{0}][{1}] is odd")]
    InvariantNotApplicable(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn list(v: &[GimViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
