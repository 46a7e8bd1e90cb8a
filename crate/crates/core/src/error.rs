use num_bigint::BigInt;
use thiserror::Error;

/// Domain and validation errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter fell below its required minimum.
    #[error("{name} must be >= {min}, got {value}")]
    Domain {
        name: &'static str,
        min: i64,
        value: i64,
    },

    /// Two quantities that the hypotheses require to be coprime are not.
    #[error("gcd({left_name}, {right_name}) = {gcd} != 1 ({left_name} = {left}, {right_name} = {right})")]
    NotCoprime {
        left_name: &'static str,
        right_name: &'static str,
        left: i128,
        right: i128,
        gcd: i128,
    },

    /// An index pair violated its ordering constraint.
    #[error("invalid indices: need {requirement}, got k = {k}, n = {n}")]
    IndexRange {
        requirement: &'static str,
        k: i64,
        n: i64,
    },

    /// The operation is only defined for bases q >= 2.
    #[error("base q = 1 is rejected here; the threshold machinery needs q >= 2")]
    UnsupportedBase,

    /// A duplicate entry makes a pairwise difference zero, so the
    /// divisibility statement has no usable modulus.
    #[error("duplicate value {value}: a pairwise difference is zero, no verdict possible")]
    DegenerateDifference { value: BigInt },

    /// A value list was empty or contained zero where nonzero entries are
    /// required.
    #[error("value list must be nonempty and free of zeros")]
    InvalidValues,

    /// A bound kind was requested for parameters outside its scope.
    #[error("bound {kind} does not apply: {reason}")]
    KindMismatch {
        kind: &'static str,
        reason: &'static str,
    },

    /// An intermediate parameter product left the machine-integer range.
    #[error("parameter overflow while computing {what}")]
    Overflow { what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
