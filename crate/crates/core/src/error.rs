use thiserror::Error;

/// Which bound was missing when a poset failed to be a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MissingBound {
    Join,
    Meet,
}

impl std::fmt::Display for MissingBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MissingBound::Join => f.write_str("join"),
            MissingBound::Meet => f.write_str("meet"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order relation has a cycle through {0} and {1}")]
    Cycle(usize, usize),

    #[error("element index {index} out of range for {n} elements")]
    Index { index: usize, n: usize },

    #[error("not a lattice: elements {x} and {y} have no {missing}")]
    NotLattice {
        x: usize,
        y: usize,
        missing: MissingBound,
    },

    #[error("not a lattice: {0}")]
    EmptyLattice(&'static str),

    #[error("relation is not a quasiorder: {0}")]
    NotQuasiorder(String),

    #[error("[{lower}, {upper}] is not an interval")]
    Interval { lower: usize, upper: usize },

    #[error("size out of range: {0}")]
    Size(String),

    #[error("enumeration cap exceeded: {count} > {cap}")]
    CapExceeded { count: u128, cap: u128 },

    #[error("catalog entry {entry} fails invariant: {invariant}")]
    CatalogValidation { entry: String, invariant: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Short stable tag used in machine-readable diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Cycle(..) => "cycle",
            Error::Index { .. } => "index",
            Error::NotLattice { .. } | Error::EmptyLattice(_) => "not-lattice",
            Error::NotQuasiorder(_) => "not-quasiorder",
            Error::Interval { .. } => "interval",
            Error::Size(_) => "size",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::CatalogValidation { .. } => "catalog",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
            Error::Usage(_) => "usage",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
