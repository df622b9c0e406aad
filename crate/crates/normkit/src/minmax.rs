//! Min-max scaling: the affine map sending the column minimum to the lower
//! target boundary and the maximum to the upper one.

use crate::column::{Method, MethodParams, NormalizedColumn, NumericColumn};
use crate::error::NormError;

/// Fitted min-max parameters: the observed source range and the requested
/// target boundary. Sufficient for exact inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinMaxParams {
    pub src_min: f64,
    pub src_max: f64,
    pub target_low: f64,
    pub target_high: f64,
}

impl MinMaxParams {
    pub fn new(
        src_min: f64,
        src_max: f64,
        target_low: f64,
        target_high: f64,
    ) -> Result<Self, NormError> {
        if !(src_min <= src_max) {
            return Err(NormError::InvalidParams(format!(
                "src_min {src_min} must not exceed src_max {src_max}"
            )));
        }
        if !(target_low < target_high) {
            return Err(NormError::InvalidBoundary { low: target_low, high: target_high });
        }
        Ok(Self { src_min, src_max, target_low, target_high })
    }

    /// True when the source column had a single distinct value; the forward
    /// map collapsed everything to `target_low` and cannot be inverted.
    pub fn is_degenerate(&self) -> bool {
        self.src_min == self.src_max
    }
}

/// Map every value through `((v - min) / (max - min)) * (high - low) + low`.
///
/// The minimum lands exactly on `target_low` and the maximum exactly on
/// `target_high`. A column with `min == max` maps entirely to `target_low`.
pub fn min_max_normalize(
    col: &NumericColumn,
    target_low: f64,
    target_high: f64,
) -> Result<(NormalizedColumn, MinMaxParams), NormError> {
    if !(target_low < target_high) {
        return Err(NormError::InvalidBoundary { low: target_low, high: target_high });
    }
    let src_min = col.values().iter().copied().fold(f64::INFINITY, f64::min);
    let src_max = col.values().iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let params = MinMaxParams { src_min, src_max, target_low, target_high };

    let span = src_max - src_min;
    let width = target_high - target_low;
    let values: Vec<f64> = if span == 0.0 {
        vec![target_low; col.len()]
    } else {
        col.values()
            .iter()
            .map(|&v| {
                if v == src_min {
                    target_low
                } else if v == src_max {
                    target_high
                } else {
                    (v - src_min) / span * width + target_low
                }
            })
            .collect()
    };

    let normalized = NormalizedColumn::new(
        col.name(),
        values,
        Method::MinMax,
        MethodParams::MinMax(params),
    );
    Ok((normalized, params))
}

/// Invert the min-max map: `((y - low) / (high - low)) * (max - min) + min`.
///
/// Errors on degenerate parameters (`src_min == src_max`): the forward map
/// destroyed the spread, so no inverse exists.
pub fn min_max_denormalize(
    norm: &NormalizedColumn,
    params: &MinMaxParams,
) -> Result<NumericColumn, NormError> {
    if params.is_degenerate() {
        return Err(NormError::DegenerateParams { value: params.src_min });
    }
    if !(params.target_low < params.target_high) {
        return Err(NormError::InvalidBoundary {
            low: params.target_low,
            high: params.target_high,
        });
    }
    let span = params.src_max - params.src_min;
    let width = params.target_high - params.target_low;
    let values: Vec<f64> = norm
        .values()
        .iter()
        .map(|&y| (y - params.target_low) / width * span + params.src_min)
        .collect();
    NumericColumn::new(norm.name(), values)
}
