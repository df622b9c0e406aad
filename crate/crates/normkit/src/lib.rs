//! Column normalization toolkit.
//!
//! Four scaling techniques over named numeric columns, each with fitted
//! parameters and an inverse transform:
//!
//! - **min-max**: affine map of the source range onto a target boundary;
//! - **z-score**: standardization by mean and sample standard deviation;
//! - **decimal scaling**: division by the smallest sufficient power of ten;
//! - **integer scaling**: per-element leading-digit stripping, integers
//!   only, with an exact inverse.
//!
//! [`dataio`] reads and writes CSV datasets and persists fitted parameters
//! as `.normmeta` sidecar files; [`report`] renders side-by-side method
//! comparisons as Markdown tables and SVG line charts.

mod column;
pub mod dataio;
mod decimal;
mod error;
mod intscale;
mod minmax;
mod numfmt;
pub mod report;
mod zscore;

pub use column::{Method, MethodParams, NormalizedColumn, NumericColumn};
pub use decimal::{decimal_scaling_denormalize, decimal_scaling_normalize, DecimalScalingParams};
pub use error::NormError;
pub use intscale::{
    digit_count, integer_scaling_denormalize, integer_scaling_normalize, leading_digit,
    ElementScaling, IntegerScalingMetadata, MAX_INTEGER_MAGNITUDE,
};
pub use minmax::{min_max_denormalize, min_max_normalize, MinMaxParams};
pub use numfmt::{format_value, round_half_away};
pub use zscore::{z_score_denormalize, z_score_normalize, ZScoreParams};
