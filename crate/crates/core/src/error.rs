use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("gram matrix is degenerate")]
    Degenerate,

    #[error("signature is ({positive}, {negative}); expected (1, n-1)")]
    Signature { positive: usize, negative: usize },

    #[error("reference vector has non-positive square")]
    BadReference,

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("form is not negative definite")]
    NotNegativeDefinite,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("point does not lie in the cone")]
    NotInCone,

    #[error("base point is fixed by the nonidentity element {word}")]
    Stabilizer { word: String },

    #[error("group generator {index} is not an isometry preserving the positive cone")]
    NotIsometry { index: usize },

    #[error("invalid face pairing: {0}")]
    Pairing(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Short machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::NotSymmetric | Error::Signature { .. } => "signature",
            Error::Degenerate => "degenerate",
            Error::BadReference => "bad_reference",
            Error::ZeroVector => "zero_vector",
            Error::NotNegativeDefinite => "not_negative_definite",
            Error::Precondition(_) => "precondition",
            Error::NotInCone => "not_in_cone",
            Error::Stabilizer { .. } => "stabilizer",
            Error::NotIsometry { .. } => "not_isometry",
            Error::Pairing(_) => "pairing",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
