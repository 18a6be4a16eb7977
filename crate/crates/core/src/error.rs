use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual modules; verification mismatches are *not* errors (they are
/// data carried by reports).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("polynomial {0:?} is reducible over F_{1}")]
    Reducible(Vec<u64>, u64),
    #[error("q = {q} exceeds the size bound {bound}")]
    SizeExceeded { q: u64, bound: u64 },
    #[error("unsupported field: {0}")]
    Unsupported(String),
    #[error("element has order < q-1: cycle closed after {0} steps")]
    NotAGenerator(u64),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("{s} is not coprime to the order {e}")]
    NotCoprime { s: i64, e: u32 },
    #[error("trace is not a rational integer (canonicalization bug): {0}")]
    NonRationalTrace(String),
    #[error("{from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("collapse requires order 2m with m odd, got {0}")]
    EvenM(u32),
    #[error("table kind mismatch: expected {expected}")]
    KindMismatch { expected: &'static str },
    #[error("inverse transform is not constant: coefficient {idx} is {value}")]
    NonConstantResult { idx: usize, value: String },
    #[error("inverse transform constant {value} is not divisible by e^2 = {esq}")]
    NotDivisibleByESquared { value: String, esq: u64 },
    #[error("index {t} out of range [0, {bound})")]
    OutOfRange { t: i64, bound: u64 },
    #[error("root finding did not converge; residuals {0:?}")]
    NonConvergence(Vec<f64>),
    #[error("non-integral trace inside an exact sweep: {0}")]
    NonIntegralTrace(String),
    #[error("{order} does not divide q - 1 = {qm1}")]
    OrderDoesNotDivide { order: u32, qm1: u64 },
    #[error("cache: {0}")]
    Cache(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
