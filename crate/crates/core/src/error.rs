use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated within a cycle")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} is not supported (must be between 1 and 255)")]
    UnsupportedDegree(usize),
    #[error("{what} exceeds cap of {cap}")]
    CapExceeded { what: String, cap: usize },
    #[error("generator {0} is not a member of the parent group")]
    NotAMember(String),
    #[error("empty generator list")]
    NoGenerators,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("fast ambient path rejected: {0}")]
    FastPathRejected(String),
    #[error("family is not reduced; call reduce_family first")]
    UnreducedFamily,
    #[error("index {index} out of range for family of size {len}")]
    FamilyIndex { index: usize, len: usize },
    #[error("involvement of {sub} in {group} is undecided within the search regime")]
    Undecided { sub: String, group: String },
    #[error("isomorphic duplicate in family: {0}")]
    DuplicateMember(String),
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("group spec: {0}")]
    Spec(String),
    #[error("catalog entry {name} failed its order check: expected {expected}, got {got}")]
    CorruptCatalog {
        name: String,
        expected: u64,
        got: u64,
    },
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, cap: usize) -> Self {
        Error::CapExceeded {
            what: what.into(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
