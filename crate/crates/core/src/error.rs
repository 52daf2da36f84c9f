use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode of the library.
///
/// Variants fall into three families that the CLI maps to distinct exit
/// codes: violated preconditions, size limits, and internal consistency
/// checks that would indicate a bug if they ever fired.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    CompositeP(u64),
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operation requires a univariate polynomial, got {0} variables")]
    MultivariateInput(usize),
    #[error("operation requires a nonconstant polynomial")]
    ConstantInput,
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("q = {q} exceeds the configured cap {cap}")]
    QTooLarge { q: u64, cap: u64 },
    #[error("operation needs a field but the coefficient ring has precision m = {0}")]
    RingNotField(u32),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("linear solve produced a non-integral or negative solution")]
    NonIntegralSolution,
    #[error("the G operator needs f(0) != 0")]
    ZeroConstantTerm,
    #[error("characteristic polynomial coefficient outside the prime field")]
    CoefficientOutsidePrimeField,
    #[error("splitting pair is linearly dependent")]
    DependentPair,
    #[error("monomial basis is empty (d = {d} < n = {n})")]
    EmptyBasis { n: usize, d: u32 },
    #[error("operator image left the monomial basis")]
    StabilityViolation,
    #[error("zeta series coefficient is not a nonnegative integer at index {0}")]
    NonIntegralCoefficient(usize),
    #[error("elements from different coefficient contexts")]
    ContextMismatch,
}

impl Error {
    /// Precondition failures, as opposed to size limits or internal checks.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::CompositeP(_)
                | Error::ReducibleModulus(_)
                | Error::InvalidArgument(_)
                | Error::MultivariateInput(_)
                | Error::ConstantInput
                | Error::RingNotField(_)
                | Error::SingularMatrix
                | Error::ZeroConstantTerm
                | Error::DependentPair
                | Error::EmptyBasis { .. }
                | Error::ContextMismatch
        )
    }

    pub fn is_size_limit(&self) -> bool {
        matches!(
            self,
            Error::SizeLimit(_) | Error::TooLarge(_) | Error::QTooLarge { .. }
        )
    }
}
