use core::fmt;

/// Errors raised by the computational core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational function whose denominator vanishes at zero.
    NotPowerSeries,
    /// The radicand is a perfect square.
    RationalInput,
    /// Zero denominator in a surd.
    InvalidDenominator,
    /// The expansion did not become periodic within the step budget.
    PeriodNotFound { steps: usize },
    /// A continued fraction with an empty period or a partial quotient below one.
    InvalidQuotients,
    /// A convergent table does not reach the required index.
    TableTooShort { needed: usize, have: usize },
    /// `k` is zero or shorter than the stored pre-period.
    NotAPreperiod { k: usize },
    /// The pre-period is too small for the component formula.
    PreperiodTooSmall { k: usize, ell: usize },
    /// Matrix machinery requires period length at least three.
    PeriodTooShort { ell: usize },
    /// A recurrence needed to divide by a zero coefficient.
    ZeroPivot { index: usize },
    /// The base matrix has zero determinant.
    SingularBase,
    /// Exhaustive enumeration refused for this size.
    EnumerationBudget { ell: usize },
    /// Leibniz expansion refused for this size.
    BruteForceBudget { size: usize },
    /// Mismatched dimensions or indices.
    Dimension,
    /// A result failed its built-in exact verification.
    VerificationFailed(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPowerSeries => f.write_str("not a power series at zero"),
            Error::RationalInput => f.write_str("rational input: radicand is a perfect square"),
            Error::InvalidDenominator => f.write_str("invalid denominator"),
            Error::PeriodNotFound { steps } => {
                write!(f, "period not found within budget ({steps} steps taken)")
            }
            Error::InvalidQuotients => {
                f.write_str("partial quotients must be >= 1 and the period nonempty")
            }
            Error::TableTooShort { needed, have } => {
                write!(f, "table too short: need index {needed}, have {have}")
            }
            Error::NotAPreperiod { k } => write!(f, "k = {k} is not a pre-period of the word"),
            Error::PreperiodTooSmall { k, ell } => {
                write!(f, "pre-period below proof threshold (k = {k} < l = {ell})")
            }
            Error::PeriodTooShort { ell } => {
                write!(f, "matrix machinery requires l >= 3 (got {ell})")
            }
            Error::ZeroPivot { index } => write!(
                f,
                "recurrence division by zero at index {index}; use brute oracle"
            ),
            Error::SingularBase => f.write_str("base matrix singular"),
            Error::EnumerationBudget { ell } => {
                write!(f, "enumeration budget exceeded (l = {ell} > 12)")
            }
            Error::BruteForceBudget { size } => {
                write!(f, "brute-force budget exceeded (size {size} > 8)")
            }
            Error::Dimension => f.write_str("dimension or index mismatch"),
            Error::VerificationFailed(what) => write!(f, "verification failed: {what}"),
        }
    }
}
