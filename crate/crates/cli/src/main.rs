use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sma_core::decide::{decide_double_rectangle_with, decide_square, decide_tight};
use sma_core::format::{parse_grid, to_json, to_text};
use sma_core::providers::{Catalog, CatalogEntry, CatalogKey, Provenance, PutOutcome};
use sma_core::rectangles::construct_double_rectangle;
use sma_core::squares::construct_sms;
use sma_core::tight::construct_tight;
use sma_core::{search_one_counted, verify, ArraySpec, Error, OracleVerdict, Providers, SearchLimits, SignedGrid};

const EXIT_INVALID: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_SOFTWARE: u8 = 70;
const EXIT_IO: u8 = 74;

/// Construct, verify and decide signed magic arrays.
#[derive(Debug, Parser)]
#[command(name = "sma", version)]
struct Cli {
    /// Accepted for interface stability; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads; searches currently run on one.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an array and print it.
    Construct {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        output: Output,
    },
    /// Check a grid file against its own m, n, s, t header.
    Verify { file: PathBuf },
    /// Decide existence of SMA(m,n;s,t) for a characterized family.
    Decide { m: usize, n: usize, s: usize, t: usize },
    /// Exhaustive search on a small spec.
    Oracle {
        /// m,n,s,t
        #[arg(long, value_parser = parse_spec)]
        spec: ArraySpec,
        #[arg(long, default_value_t = SearchLimits::default().max_filled_cells)]
        max_cells: usize,
        /// Search time budget in seconds.
        #[arg(long)]
        time: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Inspect or edit the provider catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Fully filled SMA(m,n).
    Tight {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// SMS(n;t).
    Square {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// SMA(m,2m;2t,t).
    Double {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List builtin and stored entries.
    List,
    /// Verify a grid file and store it.
    Add {
        file: PathBuf,
        /// Family key such as tight-heffter/3x4; inferred when omitted.
        #[arg(long)]
        key: Option<String>,
    },
    /// Remove unreadable or redundant stored entries.
    Gc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the grid here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

fn parse_spec(s: &str) -> Result<ArraySpec, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad spec field {p:?}")))
        .collect::<Result<_, _>>()?;
    let [m, n, s, t] = parts[..] else {
        return Err("spec needs four fields m,n,s,t".into());
    };
    ArraySpec::new(m, n, s, t).map_err(|e| e.to_string())
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Unsupported(_) => EXIT_UNSUPPORTED,
            Error::ProviderTimeout { .. } | Error::Inconclusive { .. } => EXIT_BUDGET,
            Error::InvalidSpec(_) | Error::Argument(_) => EXIT_USAGE,
            Error::Parse(_) | Error::Integrity { .. } => EXIT_PARSE,
            Error::Io(_) => EXIT_IO,
            Error::Composition(_) => EXIT_SOFTWARE,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

/// Writes to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

macro_rules! outln {
    ($($arg:tt)*) => {
        out(&format!("{}\n", format_args!($($arg)*)))
    };
}

#[derive(Serialize)]
struct VerifyOutput {
    spec: String,
    is_valid_sma: bool,
    symbol_coverage_ok: bool,
    is_shiftable: bool,
    diagonal_width: Option<usize>,
    failing_rows: Vec<usize>,
    failing_cols: Vec<usize>,
    row_sums: Vec<i64>,
    col_sums: Vec<i64>,
    row_fill_counts: Vec<usize>,
    col_fill_counts: Vec<usize>,
}

fn emit(grid: &SignedGrid, spec: &ArraySpec, output: &Output) -> Result<(), Failure> {
    let body = match output.format {
        Format::Json => to_json(grid, spec),
        Format::Text => to_text(grid, spec),
    };
    match &output.out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::from(Error::from(e))),
        None => {
            out(&body);
            Ok(())
        }
    }
}

fn providers() -> Providers {
    Providers::new(Catalog::from_env(), SearchLimits::default(), true)
}

fn construct(family: &Family, output: &Output) -> CmdResult {
    let p = providers();
    let (grid, spec) = match *family {
        Family::Tight { rows, cols } => (construct_tight(rows, cols, &p)?, ArraySpec::tight(rows, cols)),
        Family::Square { n, t } => (construct_sms(n, t, &p)?, ArraySpec::square(n, t)),
        Family::Double { m, t } => (construct_double_rectangle(m, t, &p)?, ArraySpec::double(m, t)),
    };
    emit(&grid, &spec, output)?;
    Ok(0)
}

fn read_grid(path: &PathBuf) -> Result<(SignedGrid, ArraySpec), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::from(Error::from(e)))?;
    Ok(parse_grid(&text)?)
}

fn verify_file(path: &PathBuf) -> CmdResult {
    let (grid, spec) = read_grid(path)?;
    spec.validate().map_err(|e| Failure { code: EXIT_PARSE, message: e.to_string() })?;
    let report = verify(&grid, &spec).map_err(|e| Failure { code: EXIT_PARSE, message: e.to_string() })?;
    let report_out = VerifyOutput {
        spec: spec.to_string(),
        is_valid_sma: report.is_valid_sma,
        symbol_coverage_ok: report.symbol_coverage_ok,
        is_shiftable: report.is_shiftable,
        diagonal_width: report.diagonal_width,
        failing_rows: report.failing_rows(&spec),
        failing_cols: report.failing_cols(&spec),
        row_sums: report.row_sums.clone(),
        col_sums: report.col_sums.clone(),
        row_fill_counts: report.row_fill_counts.clone(),
        col_fill_counts: report.col_fill_counts.clone(),
    };
    out(&format!("{}\n", serde_json::to_string_pretty(&report_out).expect("report serializes")));
    Ok(if report.is_valid_sma { 0 } else { EXIT_INVALID })
}

fn decide(m: usize, n: usize, s: usize, t: usize) -> CmdResult {
    let spec = ArraySpec::new(m, n, s, t)?;
    // m x 2m shapes are answered by the double-rectangle table even when tight
    let decision = if n == 2 * m && s == 2 * t && t >= 3 {
        decide_double_rectangle_with(m, t, &Catalog::from_env())?
    } else if spec.is_tight() {
        decide_tight(m, n)
    } else if m == n && s == t {
        decide_square(n, t)
    } else {
        return Err(Failure { code: EXIT_UNSUPPORTED, message: format!("family not characterized: {spec}") });
    };
    outln!("{spec}: {decision}");
    Ok(0)
}

fn oracle(spec: &ArraySpec, max_cells: usize, time: Option<u64>, output: &Output) -> CmdResult {
    let mut limits = SearchLimits { max_filled_cells: max_cells, ..SearchLimits::default() };
    if let Some(secs) = time {
        limits.time_budget = std::time::Duration::from_secs(secs);
    }
    match search_one_counted(spec, &limits) {
        Ok((OracleVerdict::Found(grid), nodes)) => {
            outln!("exists ({nodes} nodes)");
            emit(&grid, spec, output)?;
            Ok(0)
        }
        Ok((OracleVerdict::NoneExhaustive, nodes)) => {
            outln!("none (exhaustive, {nodes} nodes)");
            Ok(0)
        }
        Err(e @ Error::Inconclusive { .. }) => {
            outln!("inconclusive ({e})");
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(e.into()),
    }
}

fn catalog(action: &CatalogAction) -> CmdResult {
    let cat = Catalog::from_env();
    match action {
        CatalogAction::List => {
            let mut bad = false;
            for entry in cat.list() {
                match entry {
                    Ok(e) => outln!("{}\t{}\t{}", e.key, e.provenance, e.digest),
                    Err(e) => {
                        bad = true;
                        outln!("!\t{e}");
                    }
                }
            }
            Ok(if bad { EXIT_PARSE } else { 0 })
        }
        CatalogAction::Add { file, key } => {
            let (mut grid, spec) = read_grid(file)?;
            let key: CatalogKey = match key {
                Some(k) => k.parse()?,
                None => CatalogKey::infer(&grid, &spec).ok_or_else(|| Failure {
                    code: EXIT_PARSE,
                    message: format!("{} is not a magic rectangle or Heffter array", file.display()),
                })?,
            };
            grid.meta = Default::default();
            let entry = CatalogEntry::new(key, grid, Provenance::UserSupplied)?;
            match cat.put(&entry)? {
                PutOutcome::Stored => outln!("stored {key} {}", entry.digest),
                PutOutcome::AlreadyPresent => outln!("already present {key} {}", entry.digest),
            }
            Ok(0)
        }
        CatalogAction::Gc => {
            for name in cat.gc()? {
                outln!("removed {name}");
            }
            Ok(0)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Construct { family, output } => construct(family, output),
        Command::Verify { file } => verify_file(file),
        Command::Decide { m, n, s, t } => decide(*m, *n, *s, *t),
        Command::Oracle { spec, max_cells, time, output } => oracle(spec, *max_cells, *time, output),
        Command::Catalog { action } => catalog(action),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
