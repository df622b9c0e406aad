//! Decimal scaling: divide by the smallest power of ten that moves every
//! magnitude strictly below one.

use crate::column::{Method, MethodParams, NormalizedColumn, NumericColumn};
use crate::error::NormError;

/// Fitted decimal-scaling parameter: the exponent `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecimalScalingParams {
    pub j: u32,
}

/// Divide every value by `10^j`, with `j` the smallest non-negative
/// integer such that `max(|v|) / 10^j < 1`.
///
/// An all-zero column needs no scaling and gets `j = 0`. Sign and ordering
/// are preserved; every output lies strictly inside (-1, 1).
pub fn decimal_scaling_normalize(
    col: &NumericColumn,
) -> Result<(NormalizedColumn, DecimalScalingParams), NormError> {
    let max_abs = col.values().iter().fold(0.0f64, |acc, v| acc.max(v.abs()));

    // smallest j with max_abs < 10^j
    let mut j = 0u32;
    let mut power = 1.0f64;
    while max_abs >= power {
        j += 1;
        power *= 10.0;
    }

    let values: Vec<f64> = col.values().iter().map(|&v| v / power).collect();
    let params = DecimalScalingParams { j };
    let normalized = NormalizedColumn::new(
        col.name(),
        values,
        Method::Decimal,
        MethodParams::Decimal(params),
    );
    Ok((normalized, params))
}

/// Scale back up: multiply every value by `10^j`.
pub fn decimal_scaling_denormalize(
    norm: &NormalizedColumn,
    params: &DecimalScalingParams,
) -> Result<NumericColumn, NormError> {
    let power = 10f64.powi(params.j as i32);
    let values: Vec<f64> = norm.values().iter().map(|&v| v * power).collect();
    NumericColumn::new(norm.name(), values)
}
