//! `normkit`: scale numeric CSV columns down into a target range, use them,
//! and scale exactly back up later from the recorded sidecar parameters.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, ColorChoice, CommandFactory, FromArgMatches, Parser, Subcommand};

use normkit::dataio::{
    load_sidecar, read_csv, save_sidecar, write_csv, DataError, Dataset, ParamSidecar,
};
use normkit::report::{compare, render_markdown, render_svg_chart};
use normkit::{
    decimal_scaling_denormalize, decimal_scaling_normalize, format_value,
    integer_scaling_denormalize, integer_scaling_normalize, min_max_denormalize,
    min_max_normalize, round_half_away, z_score_denormalize, z_score_normalize, Method,
    MethodParams, NormError, NormalizedColumn, NumericColumn,
};

#[derive(Parser)]
#[command(
    name = "normkit",
    version,
    about = "Scale numeric CSV columns down into a target range and exactly back up"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a column and write a .normmeta sidecar for the way back
    Normalize(NormalizeArgs),
    /// Reconstruct original values from a normalized column and its sidecar
    Denormalize(DenormalizeArgs),
    /// Compare methods side by side as a Markdown table, CSV table or SVG chart
    Compare(CompareArgs),
    /// Print the fitted statistics that drive the transforms
    Stats(StatsArgs),
}

#[derive(Args)]
struct NormalizeArgs {
    /// Scaling method: minmax, zscore, decimal or intscale
    #[arg(long, value_parser = parse_method)]
    method: Method,
    /// Input CSV with a header row
    #[arg(long)]
    input: PathBuf,
    /// Column to scale: header name or zero-based index; a comma list scales
    /// several columns independently
    #[arg(long)]
    column: Option<String>,
    /// Output CSV path
    #[arg(long)]
    output: PathBuf,
    /// Lower target boundary (minmax only)
    #[arg(long, default_value_t = 0.0)]
    c: f64,
    /// Upper target boundary (minmax only)
    #[arg(long, default_value_t = 1.0)]
    d: f64,
    /// Round emitted values to this many places; default is exact
    /// shortest-round-trip text so that scale-up stays lossless
    #[arg(long)]
    decimals: Option<u8>,
    /// Sidecar path (default: output path with a .normmeta extension)
    #[arg(long)]
    meta: Option<PathBuf>,
}

#[derive(Args)]
struct DenormalizeArgs {
    /// Input CSV holding the normalized column
    #[arg(long)]
    input: PathBuf,
    /// Sidecar written by normalize (default: input path with a .normmeta extension)
    #[arg(long)]
    meta: Option<PathBuf>,
    /// Output CSV path for the reconstructed column
    #[arg(long)]
    output: PathBuf,
    /// Normalized column to invert (default: "<source>_<method>" from the
    /// sidecar, or the only column)
    #[arg(long)]
    column: Option<String>,
    /// Guard: fail unless the sidecar was fitted by this method
    #[arg(long, value_parser = parse_method)]
    method: Option<Method>,
    /// Round emitted values to this many places; default is exact text
    #[arg(long)]
    decimals: Option<u8>,
}

#[derive(Args)]
struct CompareArgs {
    /// Comma-separated method tags, e.g. minmax,intscale
    #[arg(long)]
    methods: String,
    /// Input CSV with a header row
    #[arg(long)]
    input: PathBuf,
    /// Column to compare: header name or zero-based index
    #[arg(long)]
    column: Option<String>,
    /// Lower target boundary (minmax only)
    #[arg(long, default_value_t = 0.0)]
    c: f64,
    /// Upper target boundary (minmax only)
    #[arg(long, default_value_t = 1.0)]
    d: f64,
    /// Decimal places for rendered cells
    #[arg(long, default_value_t = 3)]
    decimals: u8,
    /// Write the comparison as a Markdown table
    #[arg(long)]
    table: Option<PathBuf>,
    /// Write the comparison as a CSV table
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write the comparison as an SVG line chart
    #[arg(long)]
    plot: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Input CSV with a header row
    #[arg(long)]
    input: PathBuf,
    /// Column to inspect: header name or zero-based index
    #[arg(long)]
    column: Option<String>,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

enum CliError {
    /// Exit 1: the data or a processing step failed.
    Data(String),
    /// Exit 2: the flags make no sense together.
    Usage(String),
}

impl From<DataError> for CliError {
    fn from(e: DataError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<NormError> for CliError {
    fn from(e: NormError) -> Self {
        CliError::Data(e.to_string())
    }
}

fn main() -> ExitCode {
    let color = if std::env::var_os("NORMKIT_NO_COLOR").is_some() {
        ColorChoice::Never
    } else {
        ColorChoice::Auto
    };
    let matches = Cli::command().color(color).get_matches();
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());

    let result = match cli.command {
        Command::Normalize(args) => cmd_normalize(args),
        Command::Denormalize(args) => cmd_denormalize(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Stats(args) => cmd_stats(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Data(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Pick one column by header name or zero-based index.
fn select<'a>(ds: &'a Dataset, selector: &str) -> Result<&'a NumericColumn, CliError> {
    if let Some(col) = ds.column(selector) {
        return Ok(col);
    }
    if let Ok(index) = selector.parse::<usize>() {
        return ds.columns().get(index).ok_or_else(|| {
            CliError::Data(format!(
                "column index {index} out of range; the file has {} columns",
                ds.n_cols()
            ))
        });
    }
    let names: Vec<&str> = ds.columns().iter().map(NumericColumn::name).collect();
    Err(CliError::Data(format!(
        "no column named {selector:?}; available: {}",
        names.join(", ")
    )))
}

/// Resolve `--column` for commands operating on a single column: the flag
/// when given, otherwise the only column of the file.
fn select_single<'a>(
    ds: &'a Dataset,
    column: &Option<String>,
) -> Result<&'a NumericColumn, CliError> {
    match column {
        Some(sel) => select(ds, sel),
        None if ds.n_cols() == 1 => Ok(&ds.columns()[0]),
        None => Err(CliError::Usage(format!(
            "--column is required: the file has {} columns",
            ds.n_cols()
        ))),
    }
}

/// Resolve a possibly comma-separated `--column` list. An exact header
/// match wins over list splitting, so a name containing a comma still
/// selects a single column.
fn select_many<'a>(
    ds: &'a Dataset,
    column: &Option<String>,
) -> Result<Vec<&'a NumericColumn>, CliError> {
    match column {
        None => select_single(ds, column).map(|c| vec![c]),
        Some(sel) if ds.column(sel).is_some() => Ok(vec![ds.column(sel).unwrap()]),
        Some(sel) => sel.split(',').map(|part| select(ds, part.trim())).collect(),
    }
}

fn run_normalize(
    col: &NumericColumn,
    method: Method,
    low: f64,
    high: f64,
) -> Result<NormalizedColumn, NormError> {
    Ok(match method {
        Method::MinMax => min_max_normalize(col, low, high)?.0,
        Method::ZScore => z_score_normalize(col)?.0,
        Method::Decimal => decimal_scaling_normalize(col)?.0,
        Method::IntScale => integer_scaling_normalize(col)?.0,
    })
}

fn run_denormalize(norm: &NormalizedColumn) -> Result<NumericColumn, NormError> {
    match norm.params() {
        MethodParams::MinMax(p) => min_max_denormalize(norm, p),
        MethodParams::ZScore(p) => z_score_denormalize(norm, p),
        MethodParams::Decimal(p) => decimal_scaling_denormalize(norm, p),
        MethodParams::IntScale(meta) => integer_scaling_denormalize(norm, meta),
    }
}

fn default_meta_path(path: &Path) -> PathBuf {
    path.with_extension("normmeta")
}

fn per_column_meta_path(base: &Path, column: &str) -> PathBuf {
    let safe: String = column
        .chars()
        .map(|ch| if ch.is_alphanumeric() || ch == '-' || ch == '_' { ch } else { '_' })
        .collect();
    base.with_extension(format!("{safe}.normmeta"))
}

fn cmd_normalize(args: NormalizeArgs) -> Result<(), CliError> {
    let ds = read_csv(&args.input, true)?;
    let selected = select_many(&ds, &args.column)?;
    let meta_base = args.meta.clone().unwrap_or_else(|| default_meta_path(&args.output));

    let mut out_columns = Vec::new();
    let mut sidecars = Vec::new();
    for col in &selected {
        let norm = run_normalize(col, args.method, args.c, args.d)?;
        let out_name = format!("{}_{}", col.name(), args.method);
        out_columns.push((*col).clone());
        out_columns.push(
            NumericColumn::new(out_name, norm.values().to_vec())
                .expect("normalized values are finite"),
        );
        sidecars.push(ParamSidecar::new(col.name(), norm.params().clone()));
    }
    let out = Dataset::new(out_columns)?;
    write_csv(&out, &args.output, args.decimals)?;
    for sc in &sidecars {
        let path = if sidecars.len() == 1 {
            meta_base.clone()
        } else {
            per_column_meta_path(&meta_base, sc.column())
        };
        save_sidecar(sc, path)?;
    }
    Ok(())
}

fn cmd_denormalize(args: DenormalizeArgs) -> Result<(), CliError> {
    let meta_path = args.meta.clone().unwrap_or_else(|| default_meta_path(&args.input));
    let sidecar = load_sidecar(&meta_path)?;
    if let Some(expected) = args.method {
        if expected != sidecar.method() {
            return Err(CliError::Data(format!(
                "method mismatch: sidecar was fitted with {}, requested {}",
                sidecar.method(),
                expected
            )));
        }
    }

    let ds = read_csv(&args.input, true)?;
    let conventional = format!("{}_{}", sidecar.column(), sidecar.method());
    let col = match &args.column {
        Some(sel) => select(&ds, sel)?,
        None => match ds.column(&conventional) {
            Some(col) => col,
            None => select_single(&ds, &None).map_err(|_| {
                CliError::Data(format!(
                    "cannot locate the normalized column: no {conventional:?} and the file has {} columns; pass --column",
                    ds.n_cols()
                ))
            })?,
        },
    };

    let expected_rows = match sidecar.params() {
        MethodParams::IntScale(meta) => Some(meta.len()),
        MethodParams::ZScore(p) => Some(p.n),
        _ => None,
    };
    if let Some(expected) = expected_rows {
        if expected != col.len() {
            return Err(CliError::Data(format!(
                "length mismatch: sidecar describes {expected} rows, input has {}",
                col.len()
            )));
        }
    }

    let norm = NormalizedColumn::new(
        sidecar.column(),
        col.values().to_vec(),
        sidecar.method(),
        sidecar.params().clone(),
    );
    let restored = run_denormalize(&norm)?;
    let out = Dataset::new(vec![restored])?;
    write_csv(&out, &args.output, args.decimals)?;
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<(), CliError> {
    if args.table.is_none() && args.csv.is_none() && args.plot.is_none() {
        return Err(CliError::Usage(
            "nothing to write: pass at least one of --table, --csv, --plot".into(),
        ));
    }
    let methods = args
        .methods
        .split(',')
        .map(|tag| tag.trim().parse::<Method>())
        .collect::<Result<Vec<Method>, String>>()
        .map_err(CliError::Usage)?;
    if methods.is_empty() {
        return Err(CliError::Usage("--methods must name at least one method".into()));
    }

    let ds = read_csv(&args.input, true)?;
    let col = select_single(&ds, &args.column)?;
    let table = compare(col, &methods, Some((args.c, args.d)))
        .map_err(|e| CliError::Data(e.to_string()))?;

    if let Some(path) = &args.table {
        let text = render_markdown(&table, args.decimals);
        std::fs::write(path, text)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    }
    if let Some(path) = &args.csv {
        let mut columns = vec![
            NumericColumn::new("sl_no", (1..=table.n_rows()).map(|i| i as f64).collect())
                .expect("row numbers are finite"),
            NumericColumn::new(table.name(), table.originals().to_vec())
                .expect("originals already validated"),
        ];
        for (method, values) in table.method_columns() {
            let rounded = values.iter().map(|&v| round_half_away(v, args.decimals)).collect();
            columns.push(
                NumericColumn::new(method.tag(), rounded).expect("rounded values are finite"),
            );
        }
        write_csv(&Dataset::new(columns)?, path, None)?;
    }
    if let Some(path) = &args.plot {
        let svg = render_svg_chart(&table, &format!("Method comparison: {}", col.name()));
        std::fs::write(path, svg)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    let ds = read_csv(&args.input, true)?;
    let col = select_single(&ds, &args.column)?;
    let min = col.values().iter().copied().fold(f64::INFINITY, f64::min);
    let max = col.values().iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (_, z_params) = z_score_normalize(col)?;
    let (_, d_params) = decimal_scaling_normalize(col)?;

    println!("name={}", col.name());
    println!("count={}", col.len());
    println!("min={}", format_value(min, None));
    println!("max={}", format_value(max, None));
    println!("mean={}", format_value(z_params.mean, None));
    println!("std={}", format_value(z_params.std, None));
    println!("j={}", d_params.j);
    Ok(())
}
