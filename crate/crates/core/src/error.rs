use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("invalid column order: {0}")]
    InvalidPermutation(String),

    #[error("invalid modular configuration: {0}")]
    ModularConfig(String),

    #[error("monomials live in different rings ({0} vs {1} variables)")]
    VariableCount(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("closed form and direct count disagree: {0}")]
    FormulaMismatch(String),

    #[error("rewrite rule {rule} does not apply to {target}")]
    InapplicableRule { rule: String, target: String },

    #[error("non-generic syzygies: kernel dimension {0} (expected 1)")]
    NonGenericSyzygies(usize),

    #[error("delta-invariant unstable under truncation growth ({0}); raise T")]
    UnstableTruncation(String),

    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
