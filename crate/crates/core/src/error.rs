use thiserror::Error;

/// Errors surfaced by the counting and simulation layers.
///
/// `TooLarge` is the budget guard: exhaustive operations refuse to run when
/// the candidate space exceeds the configured budget instead of silently
/// degrading to sampling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ERROR ZeroInverse: 0 has no multiplicative inverse mod {modulus}")]
    ZeroInverse { modulus: u64 },

    #[error("ERROR ZeroPolynomial: the zero polynomial has no root count")]
    ZeroPolynomial,

    #[error("ERROR TooLarge: search space {required} exceeds budget {budget}")]
    TooLarge { required: u128, budget: u64 },

    #[error("ERROR UnsupportedKind: {0}")]
    UnsupportedKind(String),

    #[error("ERROR BadReduction: p = {p} is not a prime of good reduction for this curve")]
    BadReduction { p: u64 },

    #[error("ERROR PrimeClash: ell = {ell} equals the witness prime")]
    PrimeClash { ell: u64 },

    #[error("ERROR UnknownPrime: ell = {ell} is not part of the report")]
    UnknownPrime { ell: u64 },

    #[error("ERROR EmptyRange: the scan range contains no usable primes")]
    EmptyRange,

    #[error("ERROR DegenerateTable: a marginal is constant, chi-square statistic undefined")]
    DegenerateTable,

    #[error("ERROR InvalidInput: {0}")]
    InvalidInput(String),

    #[error("ERROR Io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-parsable code, the token after `ERROR` in `Display`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroInverse { .. } => "ZeroInverse",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::TooLarge { .. } => "TooLarge",
            Error::UnsupportedKind(_) => "UnsupportedKind",
            Error::BadReduction { .. } => "BadReduction",
            Error::PrimeClash { .. } => "PrimeClash",
            Error::UnknownPrime { .. } => "UnknownPrime",
            Error::EmptyRange => "EmptyRange",
            Error::DegenerateTable => "DegenerateTable",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Io(_) => "Io",
        }
    }

    /// True for budget overruns, which map to a distinct process exit code.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default ceiling on the number of candidates an exhaustive scan may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

pub(crate) fn check_budget(required: u128, budget: u64) -> Result<()> {
    if required > budget as u128 {
        Err(Error::TooLarge { required, budget })
    } else {
        Ok(())
    }
}
