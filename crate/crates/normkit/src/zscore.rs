//! Z-score standardization: subtract the mean, divide by the sample
//! standard deviation (n-1 divisor).

use crate::column::{Method, MethodParams, NormalizedColumn, NumericColumn};
use crate::error::NormError;

/// Fitted z-score parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZScoreParams {
    pub mean: f64,
    /// Sample standard deviation, n-1 divisor. Zero exactly when every
    /// source value was identical (or the column had one element).
    pub std: f64,
    pub n: usize,
}

impl ZScoreParams {
    pub fn new(mean: f64, std: f64, n: usize) -> Result<Self, NormError> {
        if !mean.is_finite() || !std.is_finite() || std < 0.0 {
            return Err(NormError::InvalidParams(format!(
                "mean {mean} and std {std} must be finite, std non-negative"
            )));
        }
        if n == 0 {
            return Err(NormError::InvalidParams("n must be positive".into()));
        }
        Ok(Self { mean, std, n })
    }
}

/// Standardize a column to `(v - mean) / std`.
///
/// Mean and variance accumulate in a single Welford pass. When the standard
/// deviation is zero (all values identical, or a single element) every
/// output is set to zero.
pub fn z_score_normalize(
    col: &NumericColumn,
) -> Result<(NormalizedColumn, ZScoreParams), NormError> {
    let n = col.len();
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for (i, &v) in col.values().iter().enumerate() {
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let std = if n < 2 { 0.0 } else { (m2 / (n - 1) as f64).sqrt() };

    let values = if std == 0.0 {
        vec![0.0; n]
    } else {
        col.values().iter().map(|&v| (v - mean) / std).collect()
    };
    let params = ZScoreParams { mean, std, n };
    let normalized = NormalizedColumn::new(
        col.name(),
        values,
        Method::ZScore,
        MethodParams::ZScore(params),
    );
    Ok((normalized, params))
}

/// Invert the standardization: `z * std + mean`.
///
/// With `std == 0` every output is the mean; the original spread was lost
/// by construction.
pub fn z_score_denormalize(
    norm: &NormalizedColumn,
    params: &ZScoreParams,
) -> Result<NumericColumn, NormError> {
    ZScoreParams::new(params.mean, params.std, params.n)?;
    let values: Vec<f64> = norm
        .values()
        .iter()
        .map(|&z| z * params.std + params.mean)
        .collect();
    NumericColumn::new(norm.name(), values)
}
