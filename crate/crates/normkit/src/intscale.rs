//! Integer scaling: strip an integer's leading decimal digit and divide the
//! remainder by `10^(N-1)`, where `N` is the digit count. Every integer
//! lands in [0, 1), each element independently of the rest, and the
//! recorded (sign, digit count, leading digit) triple makes the inverse
//! exact.

use crate::column::{Method, MethodParams, NormalizedColumn, NumericColumn};
use crate::error::NormError;

/// Largest magnitude accepted as an integer element. Beyond 2^53 an f64
/// can no longer distinguish adjacent integers, so the element's integer
/// identity is ambiguous and the exact round-trip guarantee breaks.
pub const MAX_INTEGER_MAGNITUDE: f64 = 9_007_199_254_740_992.0; // 2^53

/// Per-element scaling record: everything the inverse needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementScaling {
    /// -1 or +1; zero is recorded as +1.
    pub sign: i8,
    /// Number of decimal digits of the magnitude (N >= 1).
    pub n_digits: u32,
    /// Most significant decimal digit (0 only for the element 0).
    pub leading: u8,
}

/// Ordered per-element records for one column, in source order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntegerScalingMetadata {
    records: Vec<ElementScaling>,
}

impl IntegerScalingMetadata {
    pub fn new(records: Vec<ElementScaling>) -> Self {
        Self { records }
    }

    pub fn records(&self) -> &[ElementScaling] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Number of decimal digits of `|x|`, by repeated division.
/// `digit_count(0)` is 1.
pub fn digit_count(x: i128) -> u32 {
    let mut magnitude = x.unsigned_abs();
    let mut count = 1;
    while magnitude >= 10 {
        magnitude /= 10;
        count += 1;
    }
    count
}

/// Most significant decimal digit of `|x|`. `leading_digit(0)` is 0.
pub fn leading_digit(x: i128) -> u8 {
    let mut magnitude = x.unsigned_abs();
    while magnitude >= 10 {
        magnitude /= 10;
    }
    magnitude as u8
}

fn as_integer(value: f64, row: usize) -> Result<i64, NormError> {
    if value.fract() != 0.0 || value.abs() > MAX_INTEGER_MAGNITUDE {
        return Err(NormError::NonIntegerValue { row, value });
    }
    Ok(value as i64)
}

/// Scale each integer element independently: with `N = digit_count(x)` and
/// `A = leading_digit(x)`,
///
/// ```text
/// y = (|x| - A * 10^(N-1)) / 10^(N-1)
/// ```
///
/// Every output lies in [0, 1); single-digit elements (and zero) map to
/// exactly 0. Digit arithmetic runs on integers, so together with the
/// returned metadata the inverse reconstructs the column exactly.
pub fn integer_scaling_normalize(
    col: &NumericColumn,
) -> Result<(NormalizedColumn, IntegerScalingMetadata), NormError> {
    let mut values = Vec::with_capacity(col.len());
    let mut records = Vec::with_capacity(col.len());
    for (i, &v) in col.values().iter().enumerate() {
        let x = as_integer(v, i + 1)?;
        let magnitude = x.unsigned_abs();
        let n = digit_count(x as i128);
        let a = leading_digit(x as i128);
        let power = 10u64.pow(n - 1);
        let remainder = magnitude - u64::from(a) * power;
        values.push(remainder as f64 / power as f64);
        records.push(ElementScaling {
            sign: if x < 0 { -1 } else { 1 },
            n_digits: n,
            leading: a,
        });
    }
    let meta = IntegerScalingMetadata::new(records);
    let normalized = NormalizedColumn::new(
        col.name(),
        values,
        Method::IntScale,
        MethodParams::IntScale(meta.clone()),
    );
    Ok((normalized, meta))
}

/// Reconstruct each element as `sign * (round(y * 10^(N-1)) + A * 10^(N-1))`.
///
/// Exact inverse of [`integer_scaling_normalize`] for every accepted
/// integer column.
pub fn integer_scaling_denormalize(
    norm: &NormalizedColumn,
    meta: &IntegerScalingMetadata,
) -> Result<NumericColumn, NormError> {
    if norm.len() != meta.len() {
        return Err(NormError::LengthMismatch { expected: meta.len(), actual: norm.len() });
    }
    let mut values = Vec::with_capacity(norm.len());
    for (i, (&y, rec)) in norm.values().iter().zip(meta.records()).enumerate() {
        if !(0.0..1.0).contains(&y) {
            return Err(NormError::OutOfRange { row: i + 1, value: y });
        }
        if rec.n_digits == 0 || rec.n_digits > 38 {
            return Err(NormError::DigitRange { row: i + 1, n_digits: rec.n_digits });
        }
        let power = 10i128.pow(rec.n_digits - 1);
        let restored = (y * power as f64).round() as i128;
        let magnitude = restored + i128::from(rec.leading) * power;
        let x = if rec.sign < 0 { -magnitude } else { magnitude };
        values.push(x as f64);
    }
    NumericColumn::new(norm.name(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfmt::format_value;

    fn col(values: &[f64]) -> NumericColumn {
        NumericColumn::new("x", values.to_vec()).unwrap()
    }

    #[test]
    fn digit_count_examples() {
        assert_eq!(digit_count(1229), 4);
        assert_eq!(digit_count(0), 1);
        assert_eq!(digit_count(-917), 3);
        assert_eq!(digit_count(9), 1);
        assert_eq!(digit_count(10), 2);
        assert_eq!(digit_count(i128::MIN), 39);
    }

    #[test]
    fn leading_digit_examples() {
        assert_eq!(leading_digit(9185), 9);
        assert_eq!(leading_digit(0), 0);
        assert_eq!(leading_digit(-2300), 2);
        assert_eq!(leading_digit(7), 7);
    }

    // BSE sensex series: the published scaled column at three decimals.
    #[test]
    fn bse_sensex_matches_published_column() {
        let data = col(&[1229.0, 1264.0, 1397.0, 1455.0, 1483.0, 1523.0, 1548.0, 1594.0, 1670.0, 1680.0]);
        let (norm, meta) = integer_scaling_normalize(&data).unwrap();
        let expected = ["0.229", "0.264", "0.397", "0.455", "0.483", "0.523", "0.548", "0.594", "0.670", "0.680"];
        for (got, want) in norm.values().iter().zip(expected) {
            assert_eq!(format_value(*got, Some(3)), want);
        }
        for rec in meta.records() {
            assert_eq!((rec.sign, rec.n_digits, rec.leading), (1, 4, 1));
        }
    }

    #[test]
    fn college_enrollment_matches_published_column() {
        let data = col(&[1645.0, 2300.0, 2472.0, 1105.0, 7946.0, 1657.0, 9742.0, 4112.0, 917.0, 7219.0]);
        let (norm, _) = integer_scaling_normalize(&data).unwrap();
        let expected = ["0.645", "0.300", "0.472", "0.105", "0.946", "0.657", "0.742", "0.112", "0.170", "0.219"];
        for (got, want) in norm.values().iter().zip(expected) {
            assert_eq!(format_value(*got, Some(3)), want);
        }
    }

    #[test]
    fn single_digit_elements_collapse_to_zero() {
        let (norm, meta) = integer_scaling_normalize(&col(&[7.0])).unwrap();
        assert_eq!(norm.values(), &[0.0]);
        assert_eq!(meta.records()[0], ElementScaling { sign: 1, n_digits: 1, leading: 7 });
    }

    #[test]
    fn zero_maps_to_zero_with_defined_metadata() {
        let (norm, meta) = integer_scaling_normalize(&col(&[0.0])).unwrap();
        assert_eq!(norm.values(), &[0.0]);
        assert_eq!(meta.records()[0], ElementScaling { sign: 1, n_digits: 1, leading: 0 });
    }

    #[test]
    fn negative_elements_record_their_sign() {
        let (norm, meta) = integer_scaling_normalize(&col(&[-2677.0])).unwrap();
        assert_eq!(norm.values(), &[0.677]);
        assert_eq!(meta.records()[0], ElementScaling { sign: -1, n_digits: 4, leading: 2 });
    }

    #[test]
    fn non_integer_elements_are_rejected() {
        let err = integer_scaling_normalize(&col(&[5.0, 12.5])).unwrap_err();
        assert_eq!(err, NormError::NonIntegerValue { row: 2, value: 12.5 });
    }

    #[test]
    fn magnitudes_beyond_exact_integer_range_are_rejected() {
        let big = 2f64.powi(54);
        let err = integer_scaling_normalize(&col(&[big])).unwrap_err();
        assert!(matches!(err, NormError::NonIntegerValue { row: 1, .. }));
    }

    #[test]
    fn denormalize_inverts_published_rows() {
        let meta = IntegerScalingMetadata::new(vec![ElementScaling { sign: 1, n_digits: 4, leading: 1 }]);
        let norm = NormalizedColumn::new(
            "x",
            vec![0.229],
            Method::IntScale,
            MethodParams::IntScale(meta.clone()),
        );
        let back = integer_scaling_denormalize(&norm, &meta).unwrap();
        assert_eq!(back.values(), &[1229.0]);
    }

    #[test]
    fn denormalize_handles_zero_and_negatives() {
        let meta = IntegerScalingMetadata::new(vec![
            ElementScaling { sign: 1, n_digits: 1, leading: 0 },
            ElementScaling { sign: -1, n_digits: 4, leading: 2 },
        ]);
        let norm = NormalizedColumn::new(
            "x",
            vec![0.0, 0.677],
            Method::IntScale,
            MethodParams::IntScale(meta.clone()),
        );
        let back = integer_scaling_denormalize(&norm, &meta).unwrap();
        assert_eq!(back.values(), &[0.0, -2677.0]);
    }

    #[test]
    fn denormalize_checks_lengths_and_range() {
        let meta = IntegerScalingMetadata::new(vec![ElementScaling { sign: 1, n_digits: 1, leading: 0 }]);
        let norm = NormalizedColumn::new(
            "x",
            vec![0.0, 0.5],
            Method::IntScale,
            MethodParams::IntScale(meta.clone()),
        );
        assert_eq!(
            integer_scaling_denormalize(&norm, &meta).unwrap_err(),
            NormError::LengthMismatch { expected: 1, actual: 2 }
        );

        let meta = IntegerScalingMetadata::new(vec![ElementScaling { sign: 1, n_digits: 2, leading: 4 }]);
        let norm = NormalizedColumn::new(
            "x",
            vec![1.0],
            Method::IntScale,
            MethodParams::IntScale(meta.clone()),
        );
        assert_eq!(
            integer_scaling_denormalize(&norm, &meta).unwrap_err(),
            NormError::OutOfRange { row: 1, value: 1.0 }
        );
    }

    // Exhaustive range check over small magnitudes, both signs.
    #[test]
    fn outputs_stay_in_unit_interval_up_to_one_million() {
        for sign in [1.0, -1.0] {
            let values: Vec<f64> = (0..1_000_000i64).map(|m| sign * m as f64).collect();
            let (norm, _) = integer_scaling_normalize(&col(&values)).unwrap();
            for (m, &y) in norm.values().iter().enumerate() {
                assert!((0.0..1.0).contains(&y), "x={} gave y={y}", values[m]);
                if m <= 9 {
                    assert_eq!(y, 0.0, "single digit x={} must map to 0", values[m]);
                }
            }
        }
    }
}
