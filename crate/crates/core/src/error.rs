use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("invalid n = {n}: require n >= 3")]
    CycleTooShort { n: i64 },
    #[error("invalid k = {k}: require k >= 1")]
    StepTooSmall { k: i64 },
    #[error("invalid (n, k) = ({n}, {k}): require k < n/2")]
    StepTooLarge { n: i64, k: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix power exponent must be >= 1, got {0}")]
    ZeroExponent(u64),
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("k = {k} outside the supported range 1..={max}")]
    UnsupportedStep { k: usize, max: usize },
    #[error("n = {n} must exceed k = {k} for the state window")]
    WindowWraps { n: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has {vertices} vertices, oracle cap is {cap}")]
pub struct OracleCapExceeded {
    pub vertices: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("root finding needs degree >= 1, got degree {0:?}")]
    Degenerate(Option<usize>),
    #[error(
        "no convergence at {precision_bits} bits: roots {failed:?} unresolved, max scaled residual {max_residual:e}"
    )]
    NoConvergence {
        precision_bits: u32,
        failed: Vec<usize>,
        max_residual: f64,
        /// Best estimates at the point of failure, as `(re, im)`.
        partial: Vec<(f64, f64)>,
    },
    #[error("root {index} at ({re}, {im}) has no conjugate partner within tolerance")]
    UnpairedConjugate { index: usize, re: f64, im: f64 },
}

/// Umbrella error for the high-level pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Oracle(#[from] OracleCapExceeded),
    #[error(transparent)]
    Roots(#[from] RootError),
}
