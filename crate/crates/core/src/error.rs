use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("outside the admissible range: {0}")]
    Domain(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),

    #[error("no verified construction found for n = {n}, kappa = {kappa}")]
    ConstructionFailed { n: usize, kappa: usize },
}

impl Error {
    /// True for failures caused by size caps or search budgets rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::Unsupported(_) | Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Prefixes the message with `context`, keeping the error kind.
    pub fn with_context(self, context: &str) -> Error {
        match self {
            Error::Input(m) => Error::Input(format!("{context}: {m}")),
            Error::Graph6 { offset, reason } => Error::Graph6 { offset, reason: format!("{context}: {reason}") },
            Error::Unsupported(m) => Error::Unsupported(format!("{context}: {m}")),
            Error::Precondition(m) => Error::Precondition(format!("{context}: {m}")),
            Error::Domain(m) => Error::Domain(format!("{context}: {m}")),
            Error::Budget(m) => Error::Budget(format!("{context}: {m}")),
            e @ Error::ConstructionFailed { .. } => e,
        }
    }
}
