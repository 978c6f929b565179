use alloc::string::String;

/// Failures reported by algebra operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("input is not Hermitian")]
    NonHermitianInput,
    #[error("input is not positive")]
    NotPositive,
    #[error("input is not uniformly bounded")]
    NotBounded,
    #[error("input is not coercive")]
    NotCoercive,
    #[error("inputs do not commute")]
    NonCommuting,
    #[error("tuple entries do not pairwise commute")]
    NonCommutingTuple,
    #[error("elements belong to different algebras")]
    BackendMismatch,
    #[error("empty domain")]
    EmptyDomain,
    #[error("operation not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("{op} did not converge after {iterations} iterations")]
    NoConvergence { op: &'static str, iterations: usize },
    #[error("{check} violated with defect {defect:e}")]
    DefectExceeded { check: &'static str, defect: f64 },
    #[error("generator is not normal")]
    NotNormal,
    #[error("generator is not invertible at dimension {dim}")]
    GeneratorNotInvertible { dim: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for failures caused by an input that violates a precondition.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::NoConvergence { .. } | Error::DefectExceeded { .. }
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
