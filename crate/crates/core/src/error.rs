use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group of order {order} exceeds the element cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("not a group homomorphism: {0}")]
    InvalidHom(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("incompatible primes {0} and {1}")]
    PrimeMismatch(u32, u32),
    #[error("{0} is not a supported prime")]
    BadPrime(u32),
    #[error("matrix is singular")]
    Singular,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("module has a composition factor missing from the catalog")]
    CatalogIncomplete,
    #[error("search budget of {0} nodes exhausted")]
    NodeBudget(u64),
    #[error("matrix budget of {limit} exceeded (needed {needed})")]
    DimBudget { needed: usize, limit: usize },
    #[error("degree {requested} beyond computed degree {available}")]
    DegreeOutOfRange { requested: usize, available: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("no catalog entry matches {0}")]
    NoMatch(String),
    #[error("ambiguous match: {}", .0.join(", "))]
    AmbiguousMatch(Vec<String>),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
