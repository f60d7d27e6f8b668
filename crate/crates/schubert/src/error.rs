use thiserror::Error;

/// Domain errors. Each variant has a stable machine-readable [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {0} is not symmetric")]
    NotSymmetric(String),
    #[error("partition {partition} does not fit in {rect}")]
    ShapeOutOfBox { partition: String, rect: String },
    #[error("tableau product requires straight shapes")]
    SkewInputNotSupported,
    #[error("shape is not symmetric")]
    ShapeNotSymmetric,
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("degree {k} outside 1..={max}")]
    DegreeOutOfRange { k: usize, max: usize },
    #[error("levi {levi} does not fit in {ambient}")]
    LeviDoesNotFit { levi: String, ambient: String },
    #[error("ambient {0} is not square")]
    AmbientNotSquare(String),
    #[error("the trivial pair is excluded from the vanishing criterion")]
    TrivialPairExcluded,
    #[error("max degree {max_degree} is not below the bound {bound}")]
    BoundExceeded { max_degree: usize, bound: usize },
    #[error("{0} is not a compatible pair in {1}")]
    NotCompatible(String, String),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotSymmetric(_) => "NotSymmetric",
            Error::ShapeOutOfBox { .. } => "ShapeOutOfBox",
            Error::SkewInputNotSupported => "SkewInputNotSupported",
            Error::ShapeNotSymmetric => "ShapeNotSymmetric",
            Error::AmbientMismatch(..) => "AmbientMismatch",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::LeviDoesNotFit { .. } => "LeviDoesNotFit",
            Error::AmbientNotSquare(_) => "AmbientNotSquare",
            Error::TrivialPairExcluded => "TrivialPairExcluded",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NotCompatible(..) => "NotCompatible",
            Error::NotContained { .. } => "NotContained",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

/// Malformed textual input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct ParseError(pub String);

pub type Result<T> = std::result::Result<T, Error>;
