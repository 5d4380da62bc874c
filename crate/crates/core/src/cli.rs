//! The `gfbt` command line: `spectrum`, `sweep` and `simulate`.
//!
//! Everything lives here so the binary stays a one-line shim and the
//! command surface can be driven in-process from tests via [`run`].

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{
    self, tangential_bound_with, tangential_sphere_bound_with, union_bound, BoundError,
    BoundOptions, ChannelParams,
};
use crate::code::{canned_code, CodeError, GeneratorMatrix, WeightEnumerator, CANNED_CODE_NAMES};
use crate::montecarlo::{MCEstimate, SimError, Simulator};
use crate::special::Root;

/// Environment variable overriding the quadrature relative tolerance.
pub const QUAD_TOL_ENV: &str = "GFBT_QUAD_TOL";

/// Fixed CSV header of a sweep without simulation columns.
pub const SWEEP_COLUMNS: [&str; 9] = [
    "ebn0_db",
    "sigma",
    "union",
    "sb",
    "sb_r1",
    "tb",
    "tb_zstar",
    "tsb",
    "tsb_inner_r1",
];
pub const MC_COLUMNS: [&str; 2] = ["mc_fer", "mc_ci95"];

#[derive(Debug, Parser)]
#[command(
    name = "gfbt",
    version,
    about = "Gallager-region bounds and ML simulation for binary linear codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the weight enumerator of a code as JSON.
    Spectrum(SpectrumArgs),
    /// Evaluate bounds (and optionally simulate) over an Eb/N0 grid.
    Sweep(SweepArgs),
    /// Estimate the ML frame-error rate by Monte Carlo.
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct CodeInput {
    /// Built-in code (hamming_7_4, golay_23_12, repetition_N, spc_N, ...).
    #[arg(long)]
    pub code: Option<String>,
    /// Generator matrix file: a "k n" line, then k rows of 0/1.
    #[arg(long, value_name = "PATH")]
    pub gen_file: Option<PathBuf>,
    /// Weight enumerator JSON as printed by `gfbt spectrum`.
    #[arg(long, value_name = "PATH")]
    pub spectrum_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: CodeInput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Union,
    Sb,
    Tb,
    Tsb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub input: CodeInput,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub ebn0_start: f64,
    #[arg(long, default_value_t = 8.0, allow_negative_numbers = true)]
    pub ebn0_stop: f64,
    #[arg(long, default_value_t = 1.0)]
    pub ebn0_step: f64,
    /// Comma-separated subset of union,sb,tb,tsb.
    #[arg(long, value_delimiter = ',', default_value = "union,sb,tb,tsb")]
    pub bounds: Vec<BoundKind>,
    /// Monte Carlo trials per grid point; 0 disables simulation.
    #[arg(long, default_value_t = 0)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Evaluate the two-term form at the optimal parameter instead of the
    /// clipped integral.
    #[arg(long)]
    pub two_term: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("noise").required(true).args(["sigma", "ebn0"]))]
pub struct SimulateArgs {
    #[command(flatten)]
    pub input: CodeInput,
    /// Noise standard deviation per dimension.
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Eb/N0 in dB, converted with the code rate k/n.
    #[arg(long, allow_negative_numbers = true)]
    pub ebn0: Option<f64>,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Simulation(#[from] SimError),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad usage or input, 3 for numerical non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numerical(_) => 3,
            CliError::Simulation(SimError::WorkerPool(_)) => 1,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Spectrum(a) => cmd_spectrum(a, out),
        Command::Sweep(a) => cmd_sweep(a, out, err),
        Command::Simulate(a) => cmd_simulate(a, out),
    }
}

/// A code as given on the command line, with its spectrum resolved.
pub struct LoadedCode {
    pub generator: Option<GeneratorMatrix>,
    pub spectrum: WeightEnumerator,
}

impl LoadedCode {
    pub fn rate(&self) -> f64 {
        match &self.generator {
            Some(g) => g.rate(),
            None => self.spectrum.rate(),
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_generator(input: &CodeInput) -> Result<Option<GeneratorMatrix>, CliError> {
    if let Some(name) = &input.code {
        return canned_code(name).map(Some).map_err(|e| match e {
            CodeError::UnknownCode(_) => CliError::Usage(format!(
                "{e}; known codes: {}, repetition_N, spc_N",
                CANNED_CODE_NAMES.join(", ")
            )),
            other => other.into(),
        });
    }
    if let Some(path) = &input.gen_file {
        return Ok(Some(GeneratorMatrix::parse(&read_file(path)?)?));
    }
    Ok(None)
}

pub fn load_code(input: &CodeInput) -> Result<LoadedCode, CliError> {
    if let Some(g) = load_generator(input)? {
        let spectrum = g.weight_enumerator()?;
        return Ok(LoadedCode {
            generator: Some(g),
            spectrum,
        });
    }
    let path = input.spectrum_file.as_ref().ok_or_else(|| {
        CliError::Usage("one of --code, --gen-file, --spectrum-file is required".into())
    })?;
    Ok(LoadedCode {
        generator: None,
        spectrum: WeightEnumerator::from_json(&read_file(path)?)?,
    })
}

fn cmd_spectrum(args: &SpectrumArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let code = load_code(&args.input)?;
    writeln!(out, "{}", code.spectrum.to_json())?;
    Ok(0)
}

fn cmd_simulate(args: &SimulateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_generator(&args.input)?.ok_or_else(|| {
        CliError::Usage("simulation needs a generator matrix (--code or --gen-file)".into())
    })?;
    let sigma = match (args.sigma, args.ebn0) {
        (Some(s), _) => s,
        (None, Some(db)) => bounds::sigma_from_ebn0_db(db, g.rate()),
        (None, None) => unreachable!("clap requires one of --sigma/--ebn0"),
    };
    let sim = Simulator::new(&g)?;
    let est = sim.simulate(sigma, args.trials, args.seed, args.workers)?;
    writeln!(
        out,
        "{}",
        serde_json::to_string(&est).expect("estimate serializes")
    )?;
    Ok(0)
}

/// Validated sweep settings.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub ebn0_start_db: f64,
    pub ebn0_stop_db: f64,
    pub ebn0_step_db: f64,
    pub bounds: Vec<BoundKind>,
    pub trials: u64,
    pub seed: u64,
    pub format: OutputFormat,
    pub options: BoundOptions,
}

impl SweepConfig {
    pub fn from_args(args: &SweepArgs) -> Result<Self, CliError> {
        let (start, stop, step) = (args.ebn0_start, args.ebn0_stop, args.ebn0_step);
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(CliError::Usage("Eb/N0 grid values must be finite".into()));
        }
        if start > stop {
            return Err(CliError::Usage(format!(
                "--ebn0-start {start} exceeds --ebn0-stop {stop}"
            )));
        }
        if step <= 0.0 {
            return Err(CliError::Usage(format!("--ebn0-step {step} must be > 0")));
        }
        if args.bounds.is_empty() {
            return Err(CliError::Usage("select at least one bound".into()));
        }
        let mut options = if args.two_term {
            BoundOptions::two_term()
        } else {
            BoundOptions::default()
        };
        if let Some(tol) = quadrature_tolerance_override()? {
            options = options.with_relative_tolerance(tol);
        }
        Ok(Self {
            ebn0_start_db: start,
            ebn0_stop_db: stop,
            ebn0_step_db: step,
            bounds: args.bounds.clone(),
            trials: args.trials,
            seed: args.seed,
            format: args.format,
            options,
        })
    }

    /// Grid points `start + i·step` up to `stop`, with a little slack so
    /// that an endpoint reached by accumulated rounding is kept.
    pub fn grid(&self) -> Vec<f64> {
        let span = (self.ebn0_stop_db - self.ebn0_start_db) / self.ebn0_step_db;
        let count = (span + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| self.ebn0_start_db + i as f64 * self.ebn0_step_db)
            .collect()
    }

    fn wants(&self, kind: BoundKind) -> bool {
        self.bounds.contains(&kind)
    }
}

fn quadrature_tolerance_override() -> Result<Option<f64>, CliError> {
    match std::env::var(QUAD_TOL_ENV) {
        Err(_) => Ok(None),
        Ok(text) => match text.trim().parse::<f64>() {
            Ok(v) if v > 0.0 && v < 1.0 => Ok(Some(v)),
            _ => Err(CliError::Usage(format!(
                "{QUAD_TOL_ENV}={text} is not a tolerance in (0, 1)"
            ))),
        },
    }
}

/// A table cell: a number or "not available".
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Value(f64),
    Na,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Value(v) => format_number(*v),
            Cell::Na => "NA".into(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Value(v) if v.is_finite() => serde_json::Number::from_f64(*v)
                .map(serde_json::Value::Number)
                .unwrap_or(serde_json::Value::Null),
            Cell::Value(v) => serde_json::Value::String(format_number(*v)),
            Cell::Na => serde_json::Value::Null,
        }
    }
}

/// Scientific notation with 12 significant digits; infinities print as
/// `inf`/`-inf`, which parse back as `f64`.
pub fn format_number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.11e}")
    } else {
        format!("{v}")
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub cells: Vec<Cell>,
    pub warnings: Vec<String>,
    pub numerical_failure: bool,
}

struct RowBuilder {
    cells: Vec<Cell>,
    warnings: Vec<String>,
    numerical_failure: bool,
    ebn0: f64,
}

impl RowBuilder {
    fn record<T>(&mut self, name: &str, result: Result<T, BoundError>) -> Option<T> {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                self.numerical_failure |= e.is_numerical();
                self.warnings
                    .push(format!("{name} at {} dB: {e}", self.ebn0));
                None
            }
        }
    }

    fn push(&mut self, cells: Option<&[f64]>, width: usize) {
        match cells {
            Some(values) => self.cells.extend(values.iter().map(|&v| Cell::Value(v))),
            None => self.cells.extend(std::iter::repeat_n(Cell::Na, width)),
        }
    }
}

/// Radii that depend only on the spectrum, solved once per sweep.
struct SpectrumRadii {
    sb_r1: Result<f64, BoundError>,
    tsb_r1: Result<f64, BoundError>,
}

/// Evaluates a sweep. Rows are computed in parallel and returned in grid
/// order.
pub fn sweep_rows(code: &LoadedCode, config: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    let simulator = if config.trials > 0 {
        let g = code.generator.as_ref().ok_or_else(|| {
            CliError::Usage("--trials > 0 needs a generator matrix (--code or --gen-file)".into())
        })?;
        Some(Simulator::new(g)?)
    } else {
        None
    };
    let w = &code.spectrum;
    let radii = SpectrumRadii {
        sb_r1: bounds::sb_radius(w).map(Root::value),
        tsb_r1: bounds::tsb_inner_radius(w, w.n()).map(Root::value),
    };
    let rate = code.rate();
    config
        .grid()
        .par_iter()
        .map(|&ebn0| sweep_row(w, rate, ebn0, config, &radii, simulator.as_ref()))
        .collect()
}

fn sweep_row(
    w: &WeightEnumerator,
    rate: f64,
    ebn0: f64,
    config: &SweepConfig,
    radii: &SpectrumRadii,
    simulator: Option<&Simulator>,
) -> Result<SweepRow, CliError> {
    let ch = ChannelParams::from_ebn0_db(ebn0, w.n(), rate)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let opts = &config.options;
    let mut row = RowBuilder {
        cells: vec![Cell::Value(ebn0), Cell::Value(ch.sigma)],
        warnings: Vec::new(),
        numerical_failure: false,
        ebn0,
    };

    let union = if config.wants(BoundKind::Union) {
        row.record("union", union_bound(w, &ch))
    } else {
        None
    };
    row.push(union.as_ref().map(std::slice::from_ref), 1);

    let sb = if config.wants(BoundKind::Sb) {
        let value = row.record("sb", bounds::sphere_bound_with(w, &ch, opts));
        value
            .zip(radii.sb_r1.clone().ok())
            .map(|(b, r1)| [b.value, r1])
    } else {
        None
    };
    row.push(sb.as_ref().map(|v| &v[..]), 2);

    let tb = if config.wants(BoundKind::Tb) {
        row.record("tb", tangential_bound_with(w, &ch, opts))
            .map(|b| [b.value, b.optimal_parameter])
    } else {
        None
    };
    row.push(tb.as_ref().map(|v| &v[..]), 2);

    let tsb = if config.wants(BoundKind::Tsb) {
        let value = row.record("tsb", tangential_sphere_bound_with(w, &ch, opts));
        value
            .zip(radii.tsb_r1.clone().ok())
            .map(|(b, r1)| [b.value, r1])
    } else {
        None
    };
    row.push(tsb.as_ref().map(|v| &v[..]), 2);

    if let Some(sim) = simulator {
        let est: MCEstimate = sim.simulate(ch.sigma, config.trials, config.seed, None)?;
        row.push(Some(&[est.fer, est.ci95_half_width]), 2);
    }

    Ok(SweepRow {
        cells: row.cells,
        warnings: row.warnings,
        numerical_failure: row.numerical_failure,
    })
}

/// Column names for a sweep with or without simulation.
pub fn sweep_header(with_mc: bool) -> Vec<&'static str> {
    let mut cols = SWEEP_COLUMNS.to_vec();
    if with_mc {
        cols.extend(MC_COLUMNS);
    }
    cols
}

/// Renders rows as CSV (with header) or as a JSON array of objects.
pub fn render_sweep(rows: &[SweepRow], with_mc: bool, format: OutputFormat) -> String {
    let header = sweep_header(with_mc);
    match format {
        OutputFormat::Csv => {
            let mut s = header.join(",");
            s.push('\n');
            for row in rows {
                let line: Vec<String> = row.cells.iter().map(Cell::csv).collect();
                let _ = writeln!(s, "{}", line.join(","));
            }
            s
        }
        OutputFormat::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map = header
                        .iter()
                        .zip(&row.cells)
                        .map(|(k, c)| (k.to_string(), c.json()))
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&objects).expect("values serialize");
            s.push('\n');
            s
        }
    }
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let config = SweepConfig::from_args(args)?;
    let code = load_code(&args.input)?;
    let rows = sweep_rows(&code, &config)?;
    for row in &rows {
        for w in &row.warnings {
            writeln!(err, "warning: {w}")?;
        }
    }
    out.write_all(render_sweep(&rows, config.trials > 0, config.format).as_bytes())?;
    if rows.iter().any(|r| r.numerical_failure) {
        writeln!(
            err,
            "error: numerical evaluation did not converge for some cells (marked NA)"
        )?;
        return Ok(3);
    }
    Ok(0)
}
