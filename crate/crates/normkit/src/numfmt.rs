//! Number formatting shared by the CSV writer, the report renderer and the
//! CLI: half-away-from-zero rounding to a fixed number of decimals, or the
//! shortest text that parses back to the identical value.

/// Round `value` to `decimals` places, halves away from zero.
pub fn round_half_away(value: f64, decimals: u8) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    let r = (value * scale).round() / scale;
    // collapse -0.0 so it never prints with a sign
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Format `value` at a fixed number of decimals, or with shortest
/// round-trip text when `decimals` is `None`.
pub fn format_value(value: f64, decimals: Option<u8>) -> String {
    match decimals {
        Some(d) => format!("{:.*}", d as usize, round_half_away(value, d)),
        None => {
            let v = if value == 0.0 { 0.0 } else { value };
            format!("{v}")
        }
    }
}
