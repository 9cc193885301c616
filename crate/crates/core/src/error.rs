use thiserror::Error;

/// Errors raised by the data model, the formula builders and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid motive data: {0}")]
    InvalidMotive(String),

    #[error("invalid Hodge multiset: {0}")]
    InvalidHodgeMultiset(String),

    #[error("invalid infinity type: {0}")]
    InvalidInfinityType(String),

    #[error("not algebraic: {0}")]
    Algebraicity(String),

    #[error("invalid half-integer {0:?}")]
    InvalidHalfInt(String),

    /// The Hodge type contains a (p,p) class, so no critical point exists.
    #[error("(p,p)-class present: {0}")]
    PpClass(String),

    #[error("pair is not critical: {0}")]
    NotCriticalPair(String),

    #[error("m = {m} is not critical; legal values form {legal}")]
    NotCritical { m: String, legal: String },

    #[error("exponent of 2πi is not an integer: {0}")]
    NonIntegerExponent(String),

    #[error("rank of tag {0} is unknown")]
    UnknownRank(String),

    #[error("rule {rule} does not apply to {monomial}")]
    RuleNotApplicable { rule: String, monomial: String },

    #[error("oracle matrix of size {size} exceeds the bound {bound}")]
    SizeLimit { size: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
