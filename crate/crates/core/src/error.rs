use thiserror::Error;

/// Errors produced by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("order relation is not antisymmetric: `{0}` and `{1}` lie on a cycle")]
    AntisymmetryViolation(String, String),

    #[error("invalid order relation: {0}")]
    InvalidOrder(String),

    #[error("set is not a subset of the enclosing set")]
    NotASubset,

    #[error("empty input where a nonempty set is required")]
    EmptyInput,

    #[error("unknown element index {0}")]
    UnknownElement(usize),

    #[error("element `{y}` is not below `{x}`")]
    NotBelow { x: String, y: String },

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("map is not order-preserving: {0}")]
    NotMonotone(String),

    #[error("hypotheses not satisfied: {0}")]
    Inapplicable(String),

    #[error("supremum missing: {0}")]
    SupMissing(String),

    #[error("not Z-compact: {0}")]
    NotCompact(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("unknown subset system `{0}`")]
    UnknownSystem(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap_check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
