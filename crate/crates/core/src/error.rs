use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("lowest coefficient {0} is not a unit")]
    NotAUnit(String),
    #[error("inverse of a non-monomial exact polynomial needs a q-window")]
    UnboundedInverse,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("operation requires exact-polynomial operands")]
    NotExact,
    #[error("constant term of x-series is not 1")]
    NonUnitConstant,
    #[error("x-series has a nonzero constant term where none is allowed")]
    NonZeroConstant,
    #[error("gcd({m}, {n}) != 1")]
    InvalidSlope { m: u32, n: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("q-exponent {0} is not integral in the target units")]
    NonIntegralExponent(String),
    #[error("no stabilization by k = {k_max} for f = {f}")]
    StabilizationFailure { f: u32, k_max: u32 },
    #[error("recursion guard tripped at s = {s}, l = {l}")]
    RecursionGuardTripped { s: u32, l: u32 },
    #[error("counts decreased from k to k+1 at {0}")]
    MonotonicityViolation(String),
    #[error("negative count or area at {0}")]
    NegativeCount(String),
    #[error("negative coefficient at {0}")]
    NegativeCoefficient(String),
    #[error("functional equation violated: {0}")]
    FunctionalEquationViolation(String),
    #[error("partition size {size} exceeds cap {cap}")]
    SizeCapExceeded { size: u32, cap: u32 },
    #[error("non-integral coefficient: {0}")]
    NonIntegralCoefficient(String),
    #[error("sigma exponent {exp} is not a multiple of {m}")]
    GridViolation { exp: i64, m: u32 },
    #[error("odd u-exponent {0} survived specialization")]
    ParityViolation(i64),
    #[error("independent routes disagree: {0}")]
    RouteMismatch(String),
    #[error("grid mismatch: {0} vs {1}")]
    GridMismatch(u32, u32),
    #[error("q-window {got} is below the requested {needed}")]
    InsufficientWindow { needed: i64, got: i64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
