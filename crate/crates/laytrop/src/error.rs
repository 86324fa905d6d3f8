//! Error type shared by every module of the kernel.

use thiserror::Error;

/// Kernel-wide error enumeration. The variant name doubles as the stable
/// machine-readable error code reported by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MismatchedDescriptor: {0}")]
    MismatchedDescriptor(String),
    #[error("NotDoubled: negation requires a doubled sorting semiring")]
    NotDoubled,
    #[error("NonPositive: argument must be > 0")]
    NonPositive,
    #[error("LayerOverflow: layer arithmetic exceeded the machine range")]
    LayerOverflow,
    #[error("InvalidLayer: {0}")]
    InvalidLayer(String),
    #[error("ArityMismatch: {0}")]
    ArityMismatch(String),
    #[error("NotUnivariate: operation defined for one indeterminate")]
    NotUnivariate,
    #[error("NotTangible: {0}")]
    NotTangible(String),
    #[error("NoRoots: polynomial has fewer than two monomials")]
    NoRoots,
    #[error("UnsupportedDescriptor: {0}")]
    UnsupportedDescriptor(String),
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NotSquare: matrix is {0}x{1}")]
    NotSquare(usize, usize),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("IndexOutOfRange: {0}")]
    IndexOutOfRange(String),
    #[error("SingularMatrix: determinant is ghost or zero")]
    SingularMatrix,
    #[error("NonTangibleRHS: right-hand side entries must be tangible or zero")]
    NonTangibleRHS,
    #[error("TooManyVectors: {0}")]
    TooManyVectors(String),
    #[error("EmptySet: no vectors supplied")]
    EmptySet,
    #[error("NotFound: {0}")]
    NotFound(String),
    #[error("WitnessNotFound: dependence established but the bounded grid search found no witness")]
    WitnessNotFound,
    #[error("NotMultilinear: {0}")]
    NotMultilinear(String),
    #[error("HypothesisViolated: {0}")]
    HypothesisViolated(String),
    #[error("NotARoot: the point does not annihilate the polynomial")]
    NotARoot,
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable name used in CLI error payloads.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MismatchedDescriptor(_) => "MismatchedDescriptor",
            Error::NotDoubled => "NotDoubled",
            Error::NonPositive => "NonPositive",
            Error::LayerOverflow => "LayerOverflow",
            Error::InvalidLayer(_) => "InvalidLayer",
            Error::ArityMismatch(_) => "ArityMismatch",
            Error::NotUnivariate => "NotUnivariate",
            Error::NotTangible(_) => "NotTangible",
            Error::NoRoots => "NoRoots",
            Error::UnsupportedDescriptor(_) => "UnsupportedDescriptor",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotSquare(_, _) => "NotSquare",
            Error::TooLarge(_) => "TooLarge",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::SingularMatrix => "SingularMatrix",
            Error::NonTangibleRHS => "NonTangibleRHS",
            Error::TooManyVectors(_) => "TooManyVectors",
            Error::EmptySet => "EmptySet",
            Error::NotFound(_) => "NotFound",
            Error::WitnessNotFound => "WitnessNotFound",
            Error::NotMultilinear(_) => "NotMultilinear",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::NotARoot => "NotARoot",
            Error::Parse(_) => "ParseError",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
