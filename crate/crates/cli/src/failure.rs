use spectral_cycles::Error;
use thiserror::Error;

/// Everything that ends a run early, tagged with its exit status.
#[derive(Debug, Error)]
pub enum Failure {
    #[error("input error: {0}")]
    Input(String),
    #[error("capability refusal: {0}")]
    Capability(String),
    #[error("verification mismatch: {0}")]
    Mismatch(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Capability(_) => 3,
            Failure::Mismatch(_) => 4,
            Failure::Resource(_) => 5,
            Failure::Internal(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Overflow => Failure::Resource("integer overflow; retry with --arith big".into()),
            Error::TooLarge { .. } | Error::ResourceLimit { .. } | Error::BudgetExceeded { .. } => {
                Failure::Resource(msg)
            }
            Error::RetriesExhausted(_) => Failure::Resource(msg),
            Error::NonDivisibleTrace { .. } => Failure::Internal(msg),
            _ => Failure::Input(msg),
        }
    }
}
