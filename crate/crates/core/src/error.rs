use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input that does not describe a valid object (bad ids, open walks, parse failures).
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("edge {0} does not exist")]
    BadEdge(usize),

    #[error("subcomplex is not closed: cell {cell} of dimension {dim} is included but its face {face} is not")]
    NotClosed { dim: usize, cell: usize, face: usize },

    #[error("not a surface: {0}")]
    NotASurface(String),

    #[error("operation requires a closed surface (found {0} boundary edges)")]
    HasBoundary(usize),

    #[error("input is disconnected ({0} components)")]
    Disconnected(usize),

    #[error("too large for exhaustion: search space {size} exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("{0}")]
    Domain(String),

    #[error("general position violated: {0}")]
    GeneralPosition(String),

    #[error("graph must be simple: {0}")]
    NotSimple(String),

    #[error("double covers live over different base graphs")]
    BaseMismatch,

    #[error("move {index} rejected: {reason}")]
    MoveRejected { index: usize, reason: String },

    #[error("homology over Z needs an integer chain complex")]
    WrongRing,
}

impl Error {
    /// Whether the error is caused by unparseable or structurally invalid input,
    /// as opposed to a well-formed input outside an operation's domain.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Malformed(_) | Error::BadEdge(_))
    }
}
