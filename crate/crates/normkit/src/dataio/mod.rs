//! CSV ingestion and emission of numeric datasets, plus the sidecar files
//! that persist fitted parameters for a later scale-up.
//!
//! Input is RFC-4180-style UTF-8 CSV: comma-separated, `\n` or `\r\n`,
//! optional header row. Blank lines and lines starting with `#` are
//! skipped. Exponent notation (`1.2e3`) is accepted on input and never
//! emitted. Output always uses `\n` and a `.` decimal separator.

mod sidecar;

pub use sidecar::{load_sidecar, save_sidecar, ParamSidecar, SIDECAR_VERSION};

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::column::NumericColumn;
use crate::numfmt::format_value;

/// Errors raised while reading or writing CSV and sidecar files.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("file not found: {path}")]
    FileNotFound { path: PathBuf },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("row {row}, column {col}: cannot parse {token:?} as a number")]
    Parse { row: usize, col: usize, token: String },

    #[error("row {row}: expected {expected} fields, found {found}")]
    RaggedRows { row: usize, expected: usize, found: usize },

    #[error("CSV contains no data rows")]
    EmptyFile,

    #[error("duplicate column name {name:?}")]
    DuplicateColumn { name: String },

    #[error("columns must share one length: expected {expected}, found {found}")]
    UnequalColumns { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("unsupported sidecar version {found}; this build reads v{SIDECAR_VERSION}")]
    Version { found: u32 },

    #[error("column name {name:?} cannot be stored in a sidecar (contains a line break)")]
    UnstorableName { name: String },
}

/// A set of equally long named columns; what one CSV file holds.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    columns: Vec<NumericColumn>,
}

impl Dataset {
    pub fn new(columns: Vec<NumericColumn>) -> Result<Self, DataError> {
        let mut seen = std::collections::HashSet::new();
        let mut rows = None;
        for col in &columns {
            if !seen.insert(col.name().to_string()) {
                return Err(DataError::DuplicateColumn { name: col.name().to_string() });
            }
            match rows {
                None => rows = Some(col.len()),
                Some(expected) if expected != col.len() => {
                    return Err(DataError::UnequalColumns { expected, found: col.len() })
                }
                _ => {}
            }
        }
        Ok(Self { columns })
    }

    pub fn columns(&self) -> &[NumericColumn] {
        &self.columns
    }

    pub fn column(&self, name: &str) -> Option<&NumericColumn> {
        self.columns.iter().find(|c| c.name() == name)
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn n_rows(&self) -> usize {
        self.columns.first().map_or(0, NumericColumn::len)
    }
}

/// Parse CSV text into a dataset. With `has_header` the first kept row
/// names the columns; otherwise they are `col0`, `col1`, ...
pub fn parse_csv(text: &str, has_header: bool) -> Result<Dataset, DataError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());

    let mut records = Vec::new();
    for result in reader.records() {
        let record = result.map_err(|e| DataError::Format {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        // a record with a single empty field is a blank line
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        records.push(record);
    }

    let mut rows = records.into_iter();
    let names: Vec<String> = match rows.next() {
        None => return Err(DataError::EmptyFile),
        Some(first) if has_header => first.iter().map(str::to_string).collect(),
        Some(first) => {
            let names = (0..first.len()).map(|i| format!("col{i}")).collect();
            rows = {
                let mut v = vec![first];
                v.extend(rows);
                v.into_iter()
            };
            names
        }
    };

    let mut values: Vec<Vec<f64>> = vec![Vec::new(); names.len()];
    let mut row_count = 0usize;
    for (i, record) in rows.enumerate() {
        let row = i + 1;
        if record.len() != names.len() {
            return Err(DataError::RaggedRows {
                row,
                expected: names.len(),
                found: record.len(),
            });
        }
        for (j, field) in record.iter().enumerate() {
            let token = field.trim();
            let parsed: f64 = token
                .parse()
                .map_err(|_| DataError::Parse { row, col: j + 1, token: token.to_string() })?;
            if !parsed.is_finite() {
                return Err(DataError::Parse { row, col: j + 1, token: token.to_string() });
            }
            values[j].push(parsed);
        }
        row_count += 1;
    }
    if row_count == 0 {
        return Err(DataError::EmptyFile);
    }

    let columns = names
        .into_iter()
        .zip(values)
        .map(|(name, vals)| {
            NumericColumn::new(name, vals).expect("fields validated finite and non-empty")
        })
        .collect();
    Dataset::new(columns)
}

/// Read a CSV file from disk. See [`parse_csv`].
pub fn read_csv(path: impl AsRef<Path>, has_header: bool) -> Result<Dataset, DataError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            DataError::FileNotFound { path: path.to_path_buf() }
        } else {
            DataError::Io { path: path.to_path_buf(), source: e }
        }
    })?;
    parse_csv(&text, has_header)
}

fn escape_field(name: &str) -> String {
    let needs_quotes = name.is_empty()
        || name.starts_with('#')
        || name.contains([',', '"', '\n', '\r']);
    if needs_quotes {
        format!("\"{}\"", name.replace('"', "\"\""))
    } else {
        name.to_string()
    }
}

/// Render a dataset as CSV text: header row, then one line per row. With
/// `decimals` every value is rounded half-away-from-zero and printed at
/// that many places; without it, values print as the shortest text that
/// parses back to the identical number.
pub fn render_csv(ds: &Dataset, decimals: Option<u8>) -> String {
    let mut out = String::new();
    let header: Vec<String> = ds.columns().iter().map(|c| escape_field(c.name())).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in 0..ds.n_rows() {
        let fields: Vec<String> = ds
            .columns()
            .iter()
            .map(|c| format_value(c.values()[row], decimals))
            .collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Write a dataset to disk. See [`render_csv`].
pub fn write_csv(ds: &Dataset, path: impl AsRef<Path>, decimals: Option<u8>) -> Result<(), DataError> {
    let path = path.as_ref();
    fs::write(path, render_csv(ds, decimals))
        .map_err(|e| DataError::Io { path: path.to_path_buf(), source: e })
}
