use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("bad modulus polynomial: {0}")]
    BadModulus(String),
    #[error("field order {0} exceeds the supported maximum 2^20")]
    FieldTooLarge(u64),
    #[error("encoding {value} is not an element of GF({q})")]
    BadElement { value: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("beta = {beta} does not divide q - 1 = {order}")]
    BadBeta { beta: u64, order: u64 },
    #[error("the set of non-residues is empty for beta = 1")]
    EmptySet,
    #[error("rank {rank} is out of range for a set of size {size}")]
    BadRank { rank: usize, size: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("operands are defined over different fields")]
    SpecMismatch,
    #[error("ring element at position {0} is not a unit")]
    NotAUnit(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("l = {l} is out of range for e = {e}")]
    BadL { l: u32, e: u32 },
    #[error("expected rows of width {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("enumeration of {needed} words exceeds the budget of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("scaling factor at position {0} is zero")]
    ZeroScale(usize),
    #[error("component codes disagree on field or length")]
    Mismatch,
    #[error("Euclidean construction needs q > 3, got q = {0}")]
    FieldTooSmall(u32),
    #[error("p^(e-l) + 1 = {divisor} does not divide q - 1 = {order}")]
    DivisibilityFails { divisor: u64, order: u64 },
    #[error("beta = 1: no non-residue scaling factors exist")]
    BetaOne,
    #[error("minor search over a {k}x{k} matrix exceeds the size budget {max}")]
    SizeCap { k: usize, max: usize },
    #[error("support of b does not match the certificate's deletion set")]
    SupportMismatch,
    #[error("{count} is not a power of {q}")]
    NonIntegralLog { count: u128, q: u32 },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension error: {0}")]
    Dimension(String),
}

impl Error {
    /// Process exit status used by the command-line tool for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::SizeCap { .. } => 2,
            Error::Consistency(_) | Error::NonIntegralLog { .. } => 3,
            _ => 1,
        }
    }
}
