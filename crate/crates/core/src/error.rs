use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("denominator vanishes under substitution")]
    VanishingDenominator,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("Jacobi identity fails on {algebra} at basis triple ({i}, {j}, {k})")]
    JacobiViolation {
        algebra: String,
        i: usize,
        j: usize,
        k: usize,
    },

    #[error("not a matched pair: double Jacobi fails at basis triple ({i}, {j}, {k})")]
    NotMatchedPair { i: usize, j: usize, k: usize },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("r-matrix is not in classification form: {0}")]
    NotInClassificationForm(String),

    #[error("limit divergent: pole of order {pole_order} in {param}")]
    LimitDivergent { param: String, pole_order: i64 },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("chart singularity at the sampled point: {0}")]
    ChartSingularity(String),

    #[error("bracket not polynomial of degree <= {degree}: residual {residual}")]
    NotPolynomial { degree: usize, residual: f64 },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
