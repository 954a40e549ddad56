use thiserror::Error;

/// Failures raised by the workbench operations.
///
/// Structural problems with an input are reported as data through
/// [`crate::validation::ValidationReport`]; this type covers refused
/// preconditions, exhausted budgets and broken theorems.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("ill-typed data: {0}")]
    Typing(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("object {object} is not cancellable")]
    NotCancellable { object: String },

    #[error("no unit structure: {0}")]
    NoUnit(String),

    #[error("lambda and rho differ at the unit: lambda_I = {lambda} but rho_I = {rho}")]
    UnitsDisagree { lambda: String, rho: String },

    #[error("candidate budget of {limit} evaluations exceeded while {during}")]
    BudgetExceeded { limit: u64, during: String },

    #[error("theorem violation ({theorem}): {witness}")]
    TheoremViolation { theorem: &'static str, witness: String },
}

impl Error {
    pub(crate) fn violation(theorem: &'static str, witness: impl Into<String>) -> Self {
        Error::TheoremViolation { theorem, witness: witness.into() }
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
