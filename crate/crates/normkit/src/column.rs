use crate::decimal::DecimalScalingParams;
use crate::error::NormError;
use crate::intscale::IntegerScalingMetadata;
use crate::minmax::MinMaxParams;
use crate::zscore::ZScoreParams;

/// A named, ordered series of finite numbers. The unit every transform
/// operates on.
///
/// Construction enforces the column invariants: at least one value, and
/// every value finite. Values are never mutated after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericColumn {
    name: String,
    values: Vec<f64>,
}

impl NumericColumn {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Result<Self, NormError> {
        if values.is_empty() {
            return Err(NormError::EmptyColumn);
        }
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(NormError::NonFiniteValue { row: i + 1, value: v });
            }
        }
        Ok(Self { name: name.into(), values })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// The four supported scaling techniques.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    MinMax,
    ZScore,
    Decimal,
    IntScale,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::MinMax,
        Method::ZScore,
        Method::Decimal,
        Method::IntScale,
    ];

    /// Short tag used on the command line and in sidecar files.
    pub fn tag(self) -> &'static str {
        match self {
            Method::MinMax => "minmax",
            Method::ZScore => "zscore",
            Method::Decimal => "decimal",
            Method::IntScale => "intscale",
        }
    }

    /// Human-readable name used in table headers and chart legends.
    pub fn title(self) -> &'static str {
        match self {
            Method::MinMax => "Min-Max Normalization",
            Method::ZScore => "Z-score Normalization",
            Method::Decimal => "Decimal Scaling Normalization",
            Method::IntScale => "Integer Scaling Normalization",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "minmax" => Ok(Method::MinMax),
            "zscore" => Ok(Method::ZScore),
            "decimal" => Ok(Method::Decimal),
            "intscale" => Ok(Method::IntScale),
            other => Err(format!(
                "unknown method {other:?}; expected one of minmax, zscore, decimal, intscale"
            )),
        }
    }
}

/// Fitted parameters for one column under one method. Everything needed to
/// run the inverse transform later.
#[derive(Debug, Clone, PartialEq)]
pub enum MethodParams {
    MinMax(MinMaxParams),
    ZScore(ZScoreParams),
    Decimal(DecimalScalingParams),
    IntScale(IntegerScalingMetadata),
}

impl MethodParams {
    pub fn method(&self) -> Method {
        match self {
            MethodParams::MinMax(_) => Method::MinMax,
            MethodParams::ZScore(_) => Method::ZScore,
            MethodParams::Decimal(_) => Method::Decimal,
            MethodParams::IntScale(_) => Method::IntScale,
        }
    }
}

/// The output of a normalize operation: the scaled values together with the
/// method that produced them and the fitted parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedColumn {
    name: String,
    values: Vec<f64>,
    method: Method,
    params: MethodParams,
}

impl NormalizedColumn {
    pub fn new(
        name: impl Into<String>,
        values: Vec<f64>,
        method: Method,
        params: MethodParams,
    ) -> Self {
        debug_assert_eq!(method, params.method());
        Self { name: name.into(), values, method, params }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn params(&self) -> &MethodParams {
        &self.params
    }
}
