//! Property tests for the transform invariants: round-trips, range bounds,
//! order preservation, oracle agreement and persistence identity.

use normkit::dataio::{parse_csv, render_csv, Dataset, ParamSidecar};
use normkit::{
    decimal_scaling_denormalize, decimal_scaling_normalize, integer_scaling_denormalize,
    integer_scaling_normalize, min_max_denormalize, min_max_normalize, z_score_normalize,
    DecimalScalingParams, ElementScaling, IntegerScalingMetadata, MethodParams, MinMaxParams,
    NumericColumn, ZScoreParams,
};
use proptest::prelude::*;

fn column(values: Vec<f64>) -> NumericColumn {
    NumericColumn::new("x", values).unwrap()
}

/// Integer-valued element with a chosen decimal width, either sign.
fn integer_element() -> impl Strategy<Value = f64> {
    prop_oneof![
        1 => Just(0.0),
        9 => (1u32..=12).prop_flat_map(|digits| {
            let low = 10i64.pow(digits - 1);
            let high = 10i64.pow(digits) - 1;
            (low..=high, prop::bool::ANY)
                .prop_map(|(m, neg)| if neg { -(m as f64) } else { m as f64 })
        }),
    ]
}

fn integer_column() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(integer_element(), 1..60)
}

// Independent two-pass reference: one pass for the mean, one for the
// squared deviations.
fn two_pass_zscore(values: &[f64]) -> (f64, f64, Vec<f64>) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() < 2 {
        0.0
    } else {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    let outputs = if std == 0.0 {
        vec![0.0; values.len()]
    } else {
        values.iter().map(|v| (v - mean) / std).collect()
    };
    (mean, std, outputs)
}

// Reference j: try exponents from zero upward until dividing every element
// leaves all magnitudes below one.
fn brute_force_j(values: &[f64]) -> u32 {
    for j in 0..400u32 {
        let power = 10f64.powi(j as i32);
        if values.iter().all(|v| (v / power).abs() < 1.0) {
            return j;
        }
    }
    panic!("no exponent found");
}

proptest! {
    #[test]
    fn intscale_round_trip_is_exact_identity(values in integer_column()) {
        let col = column(values);
        let (norm, meta) = integer_scaling_normalize(&col).unwrap();
        let back = integer_scaling_denormalize(&norm, &meta).unwrap();
        prop_assert_eq!(back.values(), col.values());
    }

    #[test]
    fn intscale_outputs_lie_in_unit_interval(values in integer_column()) {
        let col = column(values.clone());
        let (norm, _) = integer_scaling_normalize(&col).unwrap();
        for (&y, &x) in norm.values().iter().zip(&values) {
            prop_assert!((0.0..1.0).contains(&y));
            if x.abs() <= 9.0 {
                prop_assert_eq!(y, 0.0);
            }
        }
    }

    #[test]
    fn intscale_is_element_local(
        values in integer_column(),
        seed in prop::num::u64::ANY,
    ) {
        let col = column(values.clone());
        let (norm, meta) = integer_scaling_normalize(&col).unwrap();

        // each element scales the same alone as inside the column
        for (i, &x) in values.iter().enumerate() {
            let (single, single_meta) = integer_scaling_normalize(&column(vec![x])).unwrap();
            prop_assert_eq!(single.values()[0], norm.values()[i]);
            prop_assert_eq!(single_meta.records()[0], meta.records()[i]);
        }

        // permuting the input permutes output and metadata identically
        let mut order: Vec<usize> = (0..values.len()).collect();
        let mut state = seed | 1;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let permuted: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        let (norm_p, meta_p) = integer_scaling_normalize(&column(permuted)).unwrap();
        for (pos, &src) in order.iter().enumerate() {
            prop_assert_eq!(norm_p.values()[pos], norm.values()[src]);
            prop_assert_eq!(meta_p.records()[pos], meta.records()[src]);
        }
    }

    #[test]
    fn minmax_maps_extremes_to_boundary_and_preserves_order(
        values in prop::collection::vec(-1e6f64..1e6, 1..60),
        low in -5.0f64..5.0,
        width in 0.1f64..10.0,
    ) {
        let col = column(values.clone());
        let high = low + width;
        let (norm, params) = min_max_normalize(&col, low, high).unwrap();

        let argmin = values.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
        let argmax = values.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
        if params.is_degenerate() {
            prop_assert!(norm.values().iter().all(|&y| y == low));
        } else {
            prop_assert_eq!(norm.values()[argmin], low);
            prop_assert_eq!(norm.values()[argmax], high);
        }
        for &y in norm.values() {
            prop_assert!(y >= low - 1e-12 && y <= high + 1e-12);
        }
        // order preservation
        for (&a, &ya) in values.iter().zip(norm.values()) {
            for (&b, &yb) in values.iter().zip(norm.values()) {
                if a < b {
                    prop_assert!(ya <= yb);
                }
            }
        }
    }

    #[test]
    fn minmax_round_trip_within_scale_relative_tolerance(
        values in prop::collection::vec(-1e6f64..1e6, 2..60),
        low in -5.0f64..5.0,
        width in 0.1f64..10.0,
    ) {
        let col = column(values.clone());
        let (norm, params) = min_max_normalize(&col, low, low + width).unwrap();
        prop_assume!(!params.is_degenerate());
        let back = min_max_denormalize(&norm, &params).unwrap();
        let scale = values.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
        for (&orig, &rec) in values.iter().zip(back.values()) {
            prop_assert!((orig - rec).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn zscore_outputs_have_zero_mean_unit_std(values in prop::collection::vec(-1e6f64..1e6, 2..60)) {
        let col = column(values);
        let (norm, params) = z_score_normalize(&col).unwrap();
        if params.std > 0.0 {
            let (mean, std, _) = two_pass_zscore(norm.values());
            prop_assert!(mean.abs() <= 1e-9);
            prop_assert!((std - 1.0).abs() <= 1e-9);
        } else {
            prop_assert!(norm.values().iter().all(|&z| z == 0.0));
        }
    }

    #[test]
    fn zscore_matches_two_pass_oracle(values in prop::collection::vec(-1_000_000i64..=1_000_000, 1..100)) {
        let values: Vec<f64> = values.into_iter().map(|v| v as f64).collect();
        let col = column(values.clone());
        let (norm, params) = z_score_normalize(&col).unwrap();
        let (mean, std, outputs) = two_pass_zscore(&values);
        prop_assert!((params.mean - mean).abs() <= 1e-12 * (1.0 + mean.abs()));
        prop_assert!((params.std - std).abs() <= 1e-12 * (1.0 + std.abs()));
        for (&got, &want) in norm.values().iter().zip(&outputs) {
            prop_assert!((got - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn decimal_scaling_j_is_minimal_and_shape_preserving(
        values in prop::collection::vec(-1e15f64..1e15, 1..60),
    ) {
        let col = column(values.clone());
        let (norm, params) = decimal_scaling_normalize(&col).unwrap();
        prop_assert_eq!(params.j, brute_force_j(&values));

        let max_out = norm.values().iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        prop_assert!(max_out < 1.0);
        if params.j > 0 {
            let weaker = 10f64.powi(params.j as i32 - 1);
            let max_abs = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
            prop_assert!(max_abs / weaker >= 1.0, "j - 1 would already suffice");
        }
        for (&v, &y) in values.iter().zip(norm.values()) {
            prop_assert_eq!(v.signum(), y.signum());
        }
        // ordering: scaled comparisons agree with source comparisons
        for i in 0..values.len() {
            for k in 0..values.len() {
                if values[i] < values[k] {
                    prop_assert!(norm.values()[i] <= norm.values()[k]);
                }
            }
        }
    }

    #[test]
    fn decimal_scaling_round_trip_is_tight(values in prop::collection::vec(-1e15f64..1e15, 1..60)) {
        let col = column(values.clone());
        let (norm, params) = decimal_scaling_normalize(&col).unwrap();
        let back = decimal_scaling_denormalize(&norm, &params).unwrap();
        for (&orig, &rec) in values.iter().zip(back.values()) {
            prop_assert!((orig - rec).abs() <= 1e-12 * orig.abs());
        }
    }

    #[test]
    fn sidecar_round_trip_is_exact(sidecar in sidecar_strategy()) {
        let text = sidecar.to_text().unwrap();
        let back = ParamSidecar::from_text(&text).unwrap();
        prop_assert_eq!(back, sidecar);
    }

    #[test]
    fn csv_round_trip_is_identity(ds in dataset_strategy()) {
        let text = render_csv(&ds, None);
        let back = parse_csv(&text, true).unwrap();
        prop_assert_eq!(back, ds);
    }
}

fn finite_f64() -> impl Strategy<Value = f64> {
    prop_oneof![
        4 => -1e12f64..1e12,
        2 => -1e-3f64..1e-3,
        1 => Just(0.0),
    ]
}

fn sidecar_strategy() -> impl Strategy<Value = ParamSidecar> {
    let minmax = (finite_f64(), finite_f64(), -5.0f64..5.0, 0.1f64..10.0).prop_map(
        |(a, b, low, width)| {
            let params =
                MinMaxParams::new(a.min(b), a.max(b), low, low + width).unwrap();
            ParamSidecar::new("col", MethodParams::MinMax(params))
        },
    );
    let zscore = (finite_f64(), 0.0f64..1e9, 1usize..10_000).prop_map(|(mean, std, n)| {
        ParamSidecar::new("col", MethodParams::ZScore(ZScoreParams::new(mean, std, n).unwrap()))
    });
    let decimal = (0u32..308)
        .prop_map(|j| ParamSidecar::new("col", MethodParams::Decimal(DecimalScalingParams { j })));
    let record = (prop::bool::ANY, 1u32..=38, 0u8..=9).prop_map(|(neg, n_digits, leading)| {
        ElementScaling { sign: if neg { -1 } else { 1 }, n_digits, leading }
    });
    let intscale = prop::collection::vec(record, 1..50).prop_map(|records| {
        ParamSidecar::new("col", MethodParams::IntScale(IntegerScalingMetadata::new(records)))
    });
    prop_oneof![minmax, zscore, decimal, intscale]
}

fn dataset_strategy() -> impl Strategy<Value = Dataset> {
    (1usize..=4, 1usize..=20).prop_flat_map(|(n_cols, n_rows)| {
        prop::collection::vec(
            prop::collection::vec(
                prop_oneof![
                    3 => integer_element(),
                    2 => -1e9f64..1e9,
                    1 => Just(0.0),
                ],
                n_rows,
            ),
            n_cols,
        )
        .prop_map(|cols| {
            let columns = cols
                .into_iter()
                .enumerate()
                .map(|(i, values)| NumericColumn::new(format!("col_{i}"), values).unwrap())
                .collect();
            Dataset::new(columns).unwrap()
        })
    })
}
