//! Side-by-side method comparison: the tabular and graphical views used to
//! contrast the scaling techniques on one column.

use thiserror::Error;

use crate::column::{Method, NumericColumn};
use crate::decimal::decimal_scaling_normalize;
use crate::error::NormError;
use crate::intscale::integer_scaling_normalize;
use crate::minmax::min_max_normalize;
use crate::numfmt::format_value;
use crate::zscore::z_score_normalize;

/// A normalization failure annotated with the method that raised it.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{method}: {source}")]
pub struct ReportError {
    pub method: Method,
    pub source: NormError,
}

/// One comparison: the original values and one normalized column per
/// requested method, in request order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    name: String,
    originals: Vec<f64>,
    columns: Vec<(Method, Vec<f64>)>,
}

impl ComparisonTable {
    pub fn new(
        name: impl Into<String>,
        originals: Vec<f64>,
        columns: Vec<(Method, Vec<f64>)>,
    ) -> Self {
        for (_, values) in &columns {
            assert_eq!(values.len(), originals.len(), "method columns must match row count");
        }
        Self { name: name.into(), originals, columns }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn originals(&self) -> &[f64] {
        &self.originals
    }

    pub fn method_columns(&self) -> &[(Method, Vec<f64>)] {
        &self.columns
    }

    pub fn n_rows(&self) -> usize {
        self.originals.len()
    }
}

/// Run every requested method over the column and collect the results in
/// request order. Row order is preserved; the input column is never
/// modified.
pub fn compare(
    col: &NumericColumn,
    methods: &[Method],
    boundary: Option<(f64, f64)>,
) -> Result<ComparisonTable, ReportError> {
    let (low, high) = boundary.unwrap_or((0.0, 1.0));
    let mut columns = Vec::with_capacity(methods.len());
    for &method in methods {
        let annotate = |source| ReportError { method, source };
        let values = match method {
            Method::MinMax => min_max_normalize(col, low, high).map_err(annotate)?.0,
            Method::ZScore => z_score_normalize(col).map_err(annotate)?.0,
            Method::Decimal => decimal_scaling_normalize(col).map_err(annotate)?.0,
            Method::IntScale => integer_scaling_normalize(col).map_err(annotate)?.0,
        };
        columns.push((method, values.values().to_vec()));
    }
    Ok(ComparisonTable::new(col.name(), col.values().to_vec(), columns))
}

/// Render the table as pipe-delimited Markdown. Original values print as
/// shortest round-trip text; normalized cells are rounded
/// half-away-from-zero at `decimals` places. Byte output is deterministic.
pub fn render_markdown(table: &ComparisonTable, decimals: u8) -> String {
    let mut out = String::from("| Sl. No. | Original Data |");
    for (method, _) in table.method_columns() {
        out.push_str(&format!(" {} |", method.title()));
    }
    out.push('\n');
    out.push_str("| --- | --- |");
    for _ in table.method_columns() {
        out.push_str(" --- |");
    }
    out.push('\n');
    for row in 0..table.n_rows() {
        out.push_str(&format!(
            "| {} | {} |",
            row + 1,
            format_value(table.originals()[row], None)
        ));
        for (_, values) in table.method_columns() {
            out.push_str(&format!(" {} |", format_value(values[row], Some(decimals))));
        }
        out.push('\n');
    }
    out
}

const CHART_WIDTH: f64 = 640.0;
const CHART_HEIGHT: f64 = 400.0;
const MARGIN_LEFT: f64 = 52.0;
const MARGIN_RIGHT: f64 = 180.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 44.0;
const PALETTE: [&str; 4] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"];

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Render the comparison as an SVG line chart: one polyline per method
/// over the row index, with point markers and a legend. The y-range is
/// pinned to [0, 1] when every method column stays inside it, otherwise it
/// auto-scales with a 5% margin. Output is deterministic.
pub fn render_svg_chart(table: &ComparisonTable, title: &str) -> String {
    let plot_w = CHART_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = CHART_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let n = table.n_rows();

    let all: Vec<f64> = table
        .method_columns()
        .iter()
        .flat_map(|(_, values)| values.iter().copied())
        .collect();
    let (y_min, y_max) = if all.is_empty() {
        (0.0, 1.0)
    } else {
        let lo = all.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = all.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if lo >= 0.0 && hi <= 1.0 {
            (0.0, 1.0)
        } else {
            let margin = if hi > lo { (hi - lo) * 0.05 } else { 0.5 };
            (lo - margin, hi + margin)
        }
    };

    let x_pos = |row: usize| -> f64 {
        if n <= 1 {
            MARGIN_LEFT + plot_w / 2.0
        } else {
            MARGIN_LEFT + plot_w * row as f64 / (n - 1) as f64
        }
    };
    let y_pos = |v: f64| -> f64 { MARGIN_TOP + plot_h * (1.0 - (v - y_min) / (y_max - y_min)) };

    let mut svg = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CHART_WIDTH}" height="{CHART_HEIGHT}" viewBox="0 0 {CHART_WIDTH} {CHART_HEIGHT}">"#
    );
    svg.push('\n');
    svg.push_str(&format!(
        r#"<rect width="{CHART_WIDTH}" height="{CHART_HEIGHT}" fill="white"/>"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="{:.2}" y="22" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        xml_escape(title)
    ));
    svg.push('\n');

    // axes
    let x0 = MARGIN_LEFT;
    let x1 = MARGIN_LEFT + plot_w;
    let y0 = MARGIN_TOP + plot_h;
    svg.push_str(&format!(
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y0:.2}" stroke="black" stroke-width="1"/>"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<line x1="{x0:.2}" y1="{MARGIN_TOP:.2}" x2="{x0:.2}" y2="{y0:.2}" stroke="black" stroke-width="1"/>"#
    ));
    svg.push('\n');

    // y ticks
    for i in 0..=4 {
        let v = y_min + (y_max - y_min) * i as f64 / 4.0;
        let y = y_pos(v);
        svg.push_str(&format!(
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="black" stroke-width="1"/>"#,
            x0 - 4.0
        ));
        svg.push_str(&format!(
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"#,
            x0 - 7.0,
            y + 4.0,
            format_value(v, Some(2))
        ));
        svg.push('\n');
    }

    // x ticks: row numbers, thinned when the table is long
    let step = n.div_ceil(10).max(1);
    for row in (0..n).step_by(step) {
        let x = x_pos(row);
        svg.push_str(&format!(
            r#"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
            y0 + 4.0
        ));
        svg.push_str(&format!(
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>"#,
            y0 + 17.0,
            row + 1
        ));
        svg.push('\n');
    }
    svg.push_str(&format!(
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">Sl. No.</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        y0 + 34.0
    ));
    svg.push('\n');

    for (idx, (method, values)) in table.method_columns().iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        if n >= 2 {
            let points: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(row, &v)| format!("{:.2},{:.2}", x_pos(row), y_pos(v)))
                .collect();
            svg.push_str(&format!(
                r#"<polyline fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#,
                points.join(" ")
            ));
            svg.push('\n');
        }
        for (row, &v) in values.iter().enumerate() {
            svg.push_str(&format!(
                r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{color}"/>"#,
                x_pos(row),
                y_pos(v)
            ));
        }
        svg.push('\n');

        // legend entry
        let ly = MARGIN_TOP + 14.0 * idx as f64;
        svg.push_str(&format!(
            r#"<rect x="{:.2}" y="{:.2}" width="10" height="10" fill="{color}"/>"#,
            x1 + 12.0,
            ly
        ));
        svg.push_str(&format!(
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{}</text>"#,
            x1 + 26.0,
            ly + 9.0,
            xml_escape(method.title())
        ));
        svg.push('\n');
    }

    svg.push_str("</svg>\n");
    svg
}
