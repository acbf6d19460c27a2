use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("element labels must be nonempty")]
    EmptyLabel,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("universe has {0} elements; at most {max} are supported", max = crate::universe::MAX_ELEMENTS)]
    UniverseTooLarge(usize),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),
    #[error("invalid covering: {0}")]
    InvalidCovering(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("{operation} is limited to |U| <= {limit}, got {size}")]
    SizeBound {
        operation: &'static str,
        limit: usize,
        size: usize,
    },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("universes are not label-disjoint; shared: {0:?}")]
    NotDisjoint(Vec<String>),
    #[error("family is not closed under union and intersection")]
    NotALattice(Box<CheckReport>),
    #[error("law violated: {0}")]
    LawViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyUniverse | Error::EmptyLabel | Error::DuplicateLabel(_) => "invalid-universe",
            Error::UniverseTooLarge(_) | Error::SizeBound { .. } => "size-bound",
            Error::UnknownLabel(_) => "unknown-label",
            Error::UniverseMismatch(_) => "universe-mismatch",
            Error::InvalidCovering(_) => "invalid-covering",
            Error::InvalidRelation(_) => "invalid-relation",
            Error::Budget(_) => "budget-exceeded",
            Error::Precondition(_) => "precondition",
            Error::NotDisjoint(_) => "not-disjoint",
            Error::NotALattice(_) => "not-a-lattice",
            Error::LawViolated(_) => "law-violated",
            Error::Parse(_) | Error::Json(_) => "parse",
            Error::Io(_) => "io",
        }
    }
}
