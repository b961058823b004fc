use thiserror::Error;

use crate::catalog::FamilyTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family}: ampleness guard violated, requires {condition}")]
    AmplenessViolation {
        family: FamilyTag,
        condition: String,
    },
    #[error("projective space dimension must be nonnegative, got {0}")]
    NegativeDimension(i64),
    #[error("got {dims} dimensions but {twists} twists")]
    DimensionMismatch { dims: usize, twists: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("product of zero factors")]
    EmptyProduct,
    #[error("family {0} cannot be enumerated directly")]
    UnsupportedFamily(FamilyTag),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family}: {message}")]
    BadParams { family: FamilyTag, message: String },
    #[error("invalid range for {param}: {lo}..{hi}")]
    InvalidRange { param: String, lo: i64, hi: i64 },
    #[error("bound {name} must be at least 1, got {value}")]
    InvalidBound { name: &'static str, value: i64 },
    #[error("no lifted pair in dimension {0}")]
    InvalidDimension(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
