use thiserror::Error;

/// Errors produced by the library.
///
/// Guard violations (an operation that would enumerate more objects than the
/// configured limits allow) are distinguished from ordinary usage errors via
/// [`Error::is_guard`], so callers can map them to a dedicated exit status.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-prime order {0}")]
    NonPrimeOrder(u64),

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u64, u64),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("coordinate {value} out of range for GF({q})")]
    CoordinateOutOfRange { value: u64, q: u64 },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("enumeration too large: {words} codewords exceeds limit {limit}")]
    EnumerationTooLarge { words: u128, limit: u64 },

    #[error("coset space too large: {cosets} cosets exceeds limit {limit}")]
    CosetSpaceTooLarge { cosets: u128, limit: u64 },

    #[error("dense function too large: {points} points exceeds limit {limit}")]
    DenseTooLarge { points: u128, limit: u64 },

    #[error("face enumeration too large: {count} exceeds limit {limit}")]
    FaceTooLarge { count: u128, limit: u64 },

    #[error("not a subspace")]
    NotASubspace,

    #[error("degenerate: alpha(U) = 1, the bound alpha/(1-alpha) is vacuous")]
    DegenerateAlpha,

    #[error("not constant-weight: codeword of weight {found}, expected {expected}")]
    NotConstantWeight { found: usize, expected: usize },

    #[error("weight profile mismatch: code has nonzero weight {weight} outside the declared set")]
    WeightProfileMismatch { weight: usize },

    #[error("input is not a valid linear-code distribution: {0}")]
    InvalidDistribution(String),

    #[error("zero function")]
    ZeroFunction,

    #[error("operation requires q = 2, got q = {0}")]
    BinaryOnly(u64),

    #[error("invalid construction parameters: {0}")]
    InvalidConstruction(String),

    #[error("character sum did not reduce to a rational number")]
    IrrationalCharacterSum,

    #[error("need at least {needed} distinct sample points, got {got}")]
    NotEnoughSamples { needed: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for size-guard violations (as opposed to invalid inputs).
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::EnumerationTooLarge { .. }
                | Error::CosetSpaceTooLarge { .. }
                | Error::DenseTooLarge { .. }
                | Error::FaceTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
