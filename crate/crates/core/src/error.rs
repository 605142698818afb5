use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("evaluation at a pole: denominator vanishes at q = {at}")]
    Pole { at: String },
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
}

/// Errors raised while building q-Euler and Frobenius-Euler sequences.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("Frobenius-Euler parameter u = 1 makes the recurrence singular")]
    SingularParameter,
    #[error("weight must be a positive integer, got {0}")]
    InvalidWeight(i64),
    #[error("closed form and recurrence disagree at weight {alpha}, n = {n}")]
    WeightedMismatch { alpha: i64, n: usize },
    #[error("cached sequence violates its defining recurrence at n = {0}")]
    CorruptCache(usize),
}

/// Errors raised by finite-precision p-adic arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PAdicError {
    #[error("p must be an odd prime, got {0}")]
    InvalidPrime(u64),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("division by a value indistinguishable from zero")]
    DivisionByZero,
    #[error("q = {0} is not admissible: need |1 - q|_p < 1")]
    InadmissibleQ(String),
    #[error("precision must be positive, got {0}")]
    InvalidPrecision(i64),
    #[error("level {level} needs {p}^{level} summands, more than the supported maximum")]
    LevelTooLarge { p: u64, level: u32 },
    #[error("precision underflow: requested {requested} digits, only {achieved} survived")]
    PrecisionUnderflow { requested: i64, achieved: i64 },
}

/// Errors raised by the Bernstein module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BernsteinError {
    #[error("index k = {k} out of range for degree n = {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("expected {expected} samples, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
