use thiserror::Error;

/// Failures surfaced by the engines. The display text starts with the
/// error's name so command-line reports can be grepped by kind.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("SingularityError: {0}")]
    Singularity(String),
    #[error("TermBudgetExceeded: {terms} terms exceeds the budget of {budget}")]
    TermBudgetExceeded { terms: usize, budget: usize },
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("ToleranceNotMet: {0}")]
    ToleranceNotMet(String),
    #[error("AssertionError: {0}")]
    LimitMismatch(String),
    #[error("ParseError: {0}")]
    Parse(String),
}
