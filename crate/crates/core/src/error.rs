use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index must be at least 1, got {0}")]
    ZeroIndex(u32),

    #[error("invalid block: lower index {lo} must satisfy 1 <= lo <= hi = {hi}")]
    InvalidBlock { lo: u32, hi: u32 },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("ill-typed arrow term: {0}")]
    IllTyped(String),

    #[error("matrix shape mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: u128, cap: usize },

    #[error("rewrite step budget of {0} exhausted")]
    StepBudget(u64),

    #[error("json: {0}")]
    Json(String),

    #[error("output: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
