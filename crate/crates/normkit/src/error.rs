use thiserror::Error;

/// Errors raised by the normalization transforms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormError {
    #[error("column is empty")]
    EmptyColumn,

    #[error("non-finite value {value} at row {row}")]
    NonFiniteValue { row: usize, value: f64 },

    #[error("invalid boundary: target_low {low} must be less than target_high {high}")]
    InvalidBoundary { low: f64, high: f64 },

    #[error("degenerate parameters: source min equals source max ({value}); inversion is ambiguous")]
    DegenerateParams { value: f64 },

    #[error("non-integer value {value} at row {row}; integer scaling accepts integers only")]
    NonIntegerValue { row: usize, value: f64 },

    #[error("length mismatch: {expected} metadata records but {actual} values")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("value {value} at row {row} is outside [0, 1)")]
    OutOfRange { row: usize, value: f64 },

    #[error("digit count {n_digits} at row {row} exceeds the supported range (1..=38)")]
    DigitRange { row: usize, n_digits: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}
