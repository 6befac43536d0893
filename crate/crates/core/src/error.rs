use thiserror::Error;

use crate::exactla::FieldSpec;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the engine can report.
///
/// Variants are grouped by how a caller should react: malformed input,
/// mathematical preconditions that do not hold for the given module, and
/// characteristic/scale limits of the computable envelope.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("modules live over different categories")]
    CategoryMismatch,
    #[error("object {0} is outside the truncation")]
    InvalidObject(usize),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("characteristic unsupported: {0}")]
    CharacteristicUnsupported(String),
    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),
    #[error("endomorphism algebra of object {0} is not semisimple")]
    NonSemisimpleEnd(usize),
    #[error("radical not computable: characteristic {p} does not exceed algebra dimension {dim}; use rationals")]
    RadicalNotComputable { dim: usize, p: u64 },
    #[error("module is not finite dimensional within the truncation window")]
    NotFiniteDimensional,
    #[error("module is projective")]
    IsProjective,
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("operation needs a different backend: {0}")]
    WrongBackend(String),
    #[error("no injectivity rule is known for this category")]
    UnknownBackendRule,
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::FieldMismatch(..)
            | Error::Shape(_)
            | Error::InvalidField(_)
            | Error::Parse(_)
            | Error::InvalidCategory(_)
            | Error::InvalidQuiver(_)
            | Error::InvalidGroup(_)
            | Error::CategoryMismatch
            | Error::InvalidObject(_)
            | Error::InvalidModule(_) => 2,
            Error::CharacteristicUnsupported(_)
            | Error::ScaleExceeded(_)
            | Error::NonSemisimpleEnd(_)
            | Error::RadicalNotComputable { .. } => 3,
            Error::NoSolution
            | Error::NotFiniteDimensional
            | Error::IsProjective
            | Error::NotIndecomposable
            | Error::WrongBackend(_)
            | Error::UnknownBackendRule
            | Error::Internal(_) => 1,
        }
    }
}
