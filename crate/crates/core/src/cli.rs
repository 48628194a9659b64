//! Command-line front end. Data goes to files or stdout, diagnostics to
//! stderr. Exit codes: 0 success, 1 invalid input, 2 computation failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::experiments::{circle_asymptotics, sweep, uncertainty, verify_main_theorem, WidthRange};
use crate::grid::make_grid;
use crate::io::{
    signal_from_json, signal_to_json, write_circle_csv, write_sweep_csv, write_trace_csv, IoError,
};
use crate::localized::{gaussian, GaussianParams};
use crate::optimize::optimize_window;
use crate::periodize::{discrete_gaussian_with_tol, DEFAULT_TAIL_TOL};
use crate::signal::Signal;
use crate::spread::{measure_spread, Domain, Measure};

#[derive(Parser, Debug)]
#[command(
    name = "dunc",
    version,
    about = "Discrete time-frequency uncertainty toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a signal.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Print one spread measure of a signal as JSON.
    Spread {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        #[arg(long, value_enum)]
        domain: DomainArg,
        /// Sparsity threshold on |x|; defaults to 1e-12 * ||x||.
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Print time and frequency variances and their product as JSON.
    Uncertainty {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Compare discrete and continuous products for a centered Gaussian.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: f64,
    },
    /// Verify a grid of Gaussian widths and lengths; writes CSV.
    Sweep {
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long)]
        c_min: f64,
        #[arg(long)]
        c_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Circle measures of periodized dilates of a Gaussian; writes CSV.
    Circle {
        #[arg(long)]
        c: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        a_list: Vec<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimize the uncertainty product from a seeded random start.
    Optimize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        iters: usize,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Sampled and periodized Gaussian.
    Gaussian(GaussianArgs),
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct GaussianArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    c: f64,
    #[arg(long, default_value_t = 0.0)]
    center: f64,
    #[arg(long, default_value_t = 0.0)]
    modulation: f64,
    #[arg(long, default_value_t = DEFAULT_TAIL_TOL)]
    tail_tol: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MeasureArg {
    Variance,
    Angular,
    Sparsity,
    Entropy,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DomainArg {
    Time,
    Freq,
}

enum Failure {
    Invalid(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OddLength(_)
            | Error::TooShort(_)
            | Error::LengthMismatch { .. }
            | Error::InvalidParameter(_) => Failure::Invalid(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Signal(inner) => inner.into(),
            IoError::Json(_) => Failure::Invalid(e.to_string()),
            IoError::Io(_) | IoError::Csv(_) => Failure::Compute(e.to_string()),
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn read_signal(path: &Path) -> Result<Signal, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    signal_from_json(&text).map_err(|e| match Failure::from(e) {
        Failure::Invalid(m) | Failure::Compute(m) => {
            Failure::Invalid(format!("{}: {m}", path.display()))
        }
    })
}

fn create(path: &Path) -> Result<fs::File, Failure> {
    fs::File::create(path)
        .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    let mut file = create(path)?;
    writeln!(file, "{text}")
        .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display())))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Compute(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            kind: GenKind::Gaussian(args),
        } => {
            let grid = make_grid(args.n)?;
            let params = GaussianParams::new(args.c, args.center, args.modulation)?;
            if !(args.tail_tol > 0.0) {
                return Err(Failure::Invalid(format!(
                    "--tail-tol must be positive, got {}",
                    args.tail_tol
                )));
            }
            let x = discrete_gaussian_with_tol(params, &grid, args.tail_tol)?;
            write_text(&args.out, &signal_to_json(&x))
        }
        Command::Spread {
            input,
            measure,
            domain,
            threshold,
        } => {
            if let Some(t) = threshold {
                if !(t >= 0.0) {
                    return Err(Failure::Invalid(format!(
                        "--threshold must be nonnegative, got {t}"
                    )));
                }
            }
            let x = read_signal(&input)?;
            let measure = match measure {
                MeasureArg::Variance => Measure::CircularVariance,
                MeasureArg::Angular => Measure::Angular,
                MeasureArg::Sparsity => Measure::Sparsity,
                MeasureArg::Entropy => Measure::Entropy,
            };
            let domain = match domain {
                DomainArg::Time => Domain::Time,
                DomainArg::Freq => Domain::Frequency,
            };
            let threshold = threshold.unwrap_or(1e-12 * x.norm());
            print_json(&measure_spread(&x, measure, domain, threshold)?)
        }
        Command::Uncertainty { input } => {
            let x = read_signal(&input)?;
            print_json(&uncertainty(&x)?)
        }
        Command::Verify { n, c } => {
            let grid = make_grid(n)?;
            let f = gaussian(GaussianParams::centered(c)?)?;
            print_json(&verify_main_theorem(&f, &grid)?)
        }
        Command::Sweep {
            n_list,
            c_min,
            c_max,
            steps,
            out,
        } => {
            for &n in &n_list {
                make_grid(n)?;
            }
            let widths = WidthRange {
                c_min,
                c_max,
                steps,
            };
            widths.widths()?;
            let rows = sweep(widths, &n_list)?;
            write_sweep_csv(create(&out)?, &rows)?;
            let failed = rows.iter().filter(|r| r.report.is_err()).count();
            if failed > 0 {
                eprintln!("warning: {failed} of {} rows failed", rows.len());
            }
            Ok(())
        }
        Command::Circle { c, a_list, out } => {
            let f = gaussian(GaussianParams::centered(c)?)?;
            if let Some(a) = a_list.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
                return Err(Failure::Invalid(format!(
                    "dilation must be positive, got {a}"
                )));
            }
            let rows = circle_asymptotics(&f, &a_list)?;
            write_circle_csv(create(&out)?, &rows)?;
            Ok(())
        }
        Command::Optimize {
            n,
            seed,
            iters,
            step,
            out,
            trace,
        } => {
            let grid = make_grid(n)?;
            if iters == 0 {
                return Err(Failure::Invalid("--iters must be at least 1".into()));
            }
            if !(step > 0.0 && step.is_finite()) {
                return Err(Failure::Invalid(format!(
                    "--step must be positive, got {step}"
                )));
            }
            let (x, tr) = optimize_window(&grid, seed, iters, step)?;
            write_text(&out, &signal_to_json(&x))?;
            if let Some(path) = trace {
                write_trace_csv(create(&path)?, &tr)?;
            }
            print_json(&serde_json::json!({
                "iterations": tr.iterations,
                "final_product": tr.final_product,
                "seed": tr.seed,
            }))
        }
    }
}
