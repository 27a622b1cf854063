use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("degree sum {sum} does not equal 2*{q}")]
    DegreeSumMismatch { sum: u64, q: u64 },

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("dimension {n} exceeds the cap of {cap}")]
    DimensionTooLarge { n: usize, cap: usize },

    #[error("invalid Veronese-type parameters: {0}")]
    InvalidVeroneseParameters(String),

    #[error("enumeration budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("polytope has {0} interior lattice points, expected exactly one")]
    NotPseudoGorenstein(u128),

    #[error("point is not an interior lattice point of the requested dilation")]
    NotAnInteriorPoint,

    #[error("no dilation up to {0} has interior lattice points")]
    EmptyInterior(u32),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("polytope is not a polymatroid: {0}")]
    NotPolymatroid(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by an enumeration cap rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded(_)
                | Error::InstanceTooLarge(_)
                | Error::DimensionTooLarge { .. }
                | Error::Overflow(_)
        )
    }
}

/// Enumeration caps shared by every exhaustive routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on candidate exponent vectors generated by base enumeration.
    pub max_candidates: u64,
    /// Cap on search-tree nodes visited by lattice point enumeration.
    pub max_lattice_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_candidates: 10_000_000,
            max_lattice_nodes: 100_000_000,
        }
    }
}

impl Limits {
    pub fn with_budget(budget: u64) -> Self {
        Limits {
            max_candidates: budget,
            max_lattice_nodes: budget,
        }
    }
}
