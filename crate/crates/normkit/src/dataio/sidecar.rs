//! The `.normmeta` sidecar: a versioned, human-inspectable text file that
//! persists fitted parameters so the inverse transform can run later or in
//! another process.
//!
//! Layout: first line `normkit-meta v1`, then a `[method]` section header,
//! then `key=value` lines. Integer-scaling metadata follows its
//! `records=N` line as `index,sign,n_digits,leading` CSV lines. Reals are
//! written as shortest round-trip text, so loading reproduces saved
//! parameters exactly.

use std::fs;
use std::path::Path;

use super::DataError;
use crate::column::{Method, MethodParams};
use crate::decimal::DecimalScalingParams;
use crate::intscale::{ElementScaling, IntegerScalingMetadata};
use crate::minmax::MinMaxParams;
use crate::zscore::ZScoreParams;

pub const SIDECAR_VERSION: u32 = 1;

/// Fitted parameters for one column, ready to persist.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSidecar {
    column: String,
    params: MethodParams,
}

impl ParamSidecar {
    pub fn new(column: impl Into<String>, params: MethodParams) -> Self {
        Self { column: column.into(), params }
    }

    pub fn column(&self) -> &str {
        &self.column
    }

    pub fn method(&self) -> Method {
        self.params.method()
    }

    pub fn params(&self) -> &MethodParams {
        &self.params
    }

    /// Serialize to sidecar text.
    pub fn to_text(&self) -> Result<String, DataError> {
        if self.column.contains(['\n', '\r']) {
            return Err(DataError::UnstorableName { name: self.column.clone() });
        }
        let mut out = format!("normkit-meta v{SIDECAR_VERSION}\n");
        out.push_str(&format!("[{}]\n", self.method().tag()));
        out.push_str(&format!("column={}\n", self.column));
        match &self.params {
            MethodParams::MinMax(p) => {
                out.push_str(&format!("src_min={}\n", p.src_min));
                out.push_str(&format!("src_max={}\n", p.src_max));
                out.push_str(&format!("target_low={}\n", p.target_low));
                out.push_str(&format!("target_high={}\n", p.target_high));
            }
            MethodParams::ZScore(p) => {
                out.push_str(&format!("mean={}\n", p.mean));
                out.push_str(&format!("std={}\n", p.std));
                out.push_str(&format!("n={}\n", p.n));
            }
            MethodParams::Decimal(p) => {
                out.push_str(&format!("j={}\n", p.j));
            }
            MethodParams::IntScale(meta) => {
                out.push_str(&format!("records={}\n", meta.len()));
                for (i, rec) in meta.records().iter().enumerate() {
                    out.push_str(&format!("{},{},{},{}\n", i, rec.sign, rec.n_digits, rec.leading));
                }
            }
        }
        Ok(out)
    }

    /// Parse sidecar text, rejecting unknown versions and malformed or
    /// semantically invalid parameter blocks.
    pub fn from_text(text: &str) -> Result<Self, DataError> {
        let mut lines = text
            .split('\n')
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.is_empty())
            .collect::<Vec<_>>()
            .into_iter();

        let (line_no, header) = lines
            .next()
            .ok_or(DataError::Format { line: 1, message: "empty sidecar".into() })?;
        let version: u32 = header
            .strip_prefix("normkit-meta v")
            .and_then(|v| v.parse().ok())
            .ok_or(DataError::Format {
                line: line_no,
                message: format!("expected `normkit-meta v{SIDECAR_VERSION}`, got {header:?}"),
            })?;
        if version != SIDECAR_VERSION {
            return Err(DataError::Version { found: version });
        }

        let (line_no, section) = lines
            .next()
            .ok_or(DataError::Format { line: 2, message: "missing method section".into() })?;
        let tag = section
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or(DataError::Format {
                line: line_no,
                message: format!("expected a [method] section, got {section:?}"),
            })?;
        let method: Method = tag
            .parse()
            .map_err(|e: String| DataError::Format { line: line_no, message: e })?;

        let mut parser = SectionParser { lines, section_line: line_no };
        let column = parser.key("column")?;
        let params = match method {
            Method::MinMax => {
                let src_min = parser.float("src_min")?;
                let src_max = parser.float("src_max")?;
                let target_low = parser.float("target_low")?;
                let target_high = parser.float("target_high")?;
                let p = MinMaxParams::new(src_min, src_max, target_low, target_high)
                    .map_err(|e| parser.semantic(e))?;
                MethodParams::MinMax(p)
            }
            Method::ZScore => {
                let mean = parser.float("mean")?;
                let std = parser.float("std")?;
                let n = parser.integer("n")? as usize;
                let p = ZScoreParams::new(mean, std, n).map_err(|e| parser.semantic(e))?;
                MethodParams::ZScore(p)
            }
            Method::Decimal => {
                let j = parser.integer("j")?;
                if j < 0 || j > u32::MAX as i64 {
                    return Err(DataError::Format {
                        line: parser.section_line,
                        message: format!("j must be a non-negative integer, got {j}"),
                    });
                }
                MethodParams::Decimal(DecimalScalingParams { j: j as u32 })
            }
            Method::IntScale => {
                let count = parser.integer("records")?;
                if count < 0 {
                    return Err(DataError::Format {
                        line: parser.section_line,
                        message: format!("records must be non-negative, got {count}"),
                    });
                }
                let mut records = Vec::with_capacity(count as usize);
                for i in 0..count as usize {
                    records.push(parser.record(i)?);
                }
                MethodParams::IntScale(IntegerScalingMetadata::new(records))
            }
        };
        if let Some((line, text)) = parser.lines.next() {
            return Err(DataError::Format {
                line,
                message: format!("unexpected trailing content {text:?}"),
            });
        }
        Ok(Self { column, params })
    }
}

struct SectionParser<'a> {
    lines: std::vec::IntoIter<(usize, &'a str)>,
    section_line: usize,
}

impl<'a> SectionParser<'a> {
    fn key(&mut self, expected: &str) -> Result<String, DataError> {
        let (line, text) = self.lines.next().ok_or(DataError::Format {
            line: self.section_line,
            message: format!("missing key {expected}"),
        })?;
        let (key, value) = text.split_once('=').ok_or(DataError::Format {
            line,
            message: format!("expected {expected}=<value>, got {text:?}"),
        })?;
        if key != expected {
            return Err(DataError::Format {
                line,
                message: format!("expected key {expected}, got {key:?}"),
            });
        }
        Ok(value.to_string())
    }

    fn float(&mut self, expected: &str) -> Result<f64, DataError> {
        let value = self.key(expected)?;
        value
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or(DataError::Format {
                line: self.section_line,
                message: format!("{expected} must be a finite number, got {value:?}"),
            })
    }

    fn integer(&mut self, expected: &str) -> Result<i64, DataError> {
        let value = self.key(expected)?;
        value.parse::<i64>().map_err(|_| DataError::Format {
            line: self.section_line,
            message: format!("{expected} must be an integer, got {value:?}"),
        })
    }

    fn record(&mut self, index: usize) -> Result<ElementScaling, DataError> {
        let (line, text) = self.lines.next().ok_or(DataError::Format {
            line: self.section_line,
            message: format!("missing record {index}"),
        })?;
        let bad = |message: String| DataError::Format { line, message };
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(bad(format!("expected index,sign,n_digits,leading, got {text:?}")));
        }
        let idx: usize = parts[0].parse().map_err(|_| bad(format!("bad index {:?}", parts[0])))?;
        if idx != index {
            return Err(bad(format!("record index {idx} out of order, expected {index}")));
        }
        let sign: i8 = parts[1].parse().map_err(|_| bad(format!("bad sign {:?}", parts[1])))?;
        if sign != 1 && sign != -1 {
            return Err(bad(format!("sign must be 1 or -1, got {sign}")));
        }
        let n_digits: u32 =
            parts[2].parse().map_err(|_| bad(format!("bad n_digits {:?}", parts[2])))?;
        if n_digits == 0 || n_digits > 38 {
            return Err(bad(format!("n_digits must be in 1..=38, got {n_digits}")));
        }
        let leading: u8 =
            parts[3].parse().map_err(|_| bad(format!("bad leading digit {:?}", parts[3])))?;
        if leading > 9 {
            return Err(bad(format!("leading digit must be in 0..=9, got {leading}")));
        }
        Ok(ElementScaling { sign, n_digits, leading })
    }

    fn semantic(&self, err: crate::NormError) -> DataError {
        DataError::Format { line: self.section_line, message: err.to_string() }
    }
}

/// Write a sidecar next to its data. The companion of [`load_sidecar`].
pub fn save_sidecar(sc: &ParamSidecar, path: impl AsRef<Path>) -> Result<(), DataError> {
    let path = path.as_ref();
    fs::write(path, sc.to_text()?)
        .map_err(|e| DataError::Io { path: path.to_path_buf(), source: e })
}

/// Load a sidecar saved by [`save_sidecar`]; the result compares equal to
/// what was saved.
pub fn load_sidecar(path: impl AsRef<Path>) -> Result<ParamSidecar, DataError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            DataError::FileNotFound { path: path.to_path_buf() }
        } else {
            DataError::Io { path: path.to_path_buf(), source: e }
        }
    })?;
    ParamSidecar::from_text(&text)
}
