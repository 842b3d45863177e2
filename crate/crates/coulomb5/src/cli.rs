//! Command-line front end.
//!
//! Exit codes: 0 when every check passes (or a table was written), 1 when a
//! check fails, 2 on usage, configuration or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Format, RadialGrid, RunConfig, TolOverride, Tolerances};
use crate::output::{emit, format_float, report_table};
use crate::suites::{cmd_verify, VerificationReport};
use crate::tables::{basis_check_table, radial_table, scatter_field_table, xsec_table};
use crate::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "COULOMB5_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "coulomb5",
    version,
    about = "Five-dimensional Coulomb continuum, Hurwitz duality and scattering"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every verification suite and report the largest residual of each check.
    Verify,
    /// Radial continuum function against its asymptotic form.
    RadialTable,
    /// Per-point PDE residuals of the hyperspherical or parabolic basis.
    BasisCheck {
        /// Check the parabolic basis instead of the hyperspherical one.
        #[arg(long)]
        parabolic: bool,
    },
    /// Scattering amplitude and cross section over the angular grid.
    Xsec,
    /// Scattering state and its incident/scattered split on the (r, theta) grid.
    ScatterField,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Bohr radius a (internal units hbar = mu = 1, e^2 = 1/a).
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Wavenumber k.
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub k: f64,
    /// Largest partial-wave index lambda.
    #[arg(long, global = true, default_value_t = 3)]
    pub lam_max: u32,
    /// Radial grid MIN:MAX:N.
    #[arg(long, global = true, default_value_t = RadialGrid::default())]
    pub grid_r: RadialGrid,
    /// Number of angular intervals on [0, pi].
    #[arg(long, global = true, default_value_t = 36)]
    pub grid_theta: usize,
    /// Output format, csv or json.
    #[arg(long, global = true, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed of the randomised sample points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance override NAME=VALUE (repeatable; NAME=all sets every tolerance).
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    pub tol: Vec<TolOverride>,
}

impl Opts {
    pub fn config(&self) -> Result<RunConfig, Error> {
        let mut tolerances = Tolerances::default();
        for o in &self.tol {
            tolerances.apply(o)?;
        }
        let cfg = RunConfig {
            a: self.a,
            k: self.k,
            lam_max: self.lam_max,
            grid_r: self.grid_r,
            n_theta: self.grid_theta,
            format: self.format,
            out: self.out.clone(),
            seed: self.seed,
            tolerances,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Size the global worker pool from [`THREADS_ENV`], if set.
fn init_threads() -> Result<(), Error> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = match v.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => return Err(Error::Threads(v)),
    };
    // a pool built earlier in the same process keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parse `args`, run the command and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, Error> {
    let cfg = cli.opts.config()?;
    init_threads()?;
    let out = cfg.out.as_deref();
    match cli.command {
        Command::Verify => {
            let reports = cmd_verify(&cfg)?;
            summarize(&reports);
            let mut meta = cfg.metadata("verify");
            meta.extend(
                cfg.tolerances
                    .iter()
                    .map(|(k, v)| (format!("tol.{k}"), format_float(v))),
            );
            emit(cfg.format, out, &meta, &report_table(&reports))?;
            Ok(if reports.iter().all(VerificationReport::pass) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::RadialTable => {
            emit(cfg.format, out, &cfg.metadata("radial-table"), &radial_table(&cfg)?)?;
            Ok(EXIT_PASS)
        }
        Command::BasisCheck { parabolic } => {
            let (table, pass) = basis_check_table(&cfg, parabolic)?;
            let mut meta = cfg.metadata("basis-check");
            meta.push((
                "basis".into(),
                if parabolic { "parabolic" } else { "hyperspherical" }.into(),
            ));
            emit(cfg.format, out, &meta, &table)?;
            let failed = table
                .rows
                .iter()
                .filter(|r| r.last() != Some(&crate::tables::Cell::Bool(true)))
                .count();
            eprintln!("basis-check: {} points, {failed} above tolerance", table.rows.len());
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Xsec => {
            emit(cfg.format, out, &cfg.metadata("xsec"), &xsec_table(&cfg)?)?;
            Ok(EXIT_PASS)
        }
        Command::ScatterField => {
            let mut meta = cfg.metadata("scatter-field");
            meta.push((
                "threshold".into(),
                format_float(coulomb5_core::scattering::DEFAULT_THRESHOLD),
            ));
            emit(cfg.format, out, &meta, &scatter_field_table(&cfg)?)?;
            Ok(EXIT_PASS)
        }
    }
}

/// Human-readable summary with wall-times, on standard error only.
fn summarize(reports: &[VerificationReport]) {
    let mut err = std::io::stderr().lock();
    for r in reports {
        let _ = writeln!(
            err,
            "[{}] {} ({:.2?})",
            if r.pass() { "PASS" } else { "FAIL" },
            r.suite,
            r.wall_time
        );
        for c in &r.checks {
            let status = if c.pass { "ok  " } else { "FAIL" };
            let _ = write!(
                err,
                "  {status} {:<22} max {:>12} tol {:>8} ({} samples)",
                c.name,
                format_float(c.max_residual),
                format_float(c.tolerance),
                c.samples
            );
            match &c.error {
                Some(e) => {
                    let _ = writeln!(err, " error: {e}");
                }
                None => {
                    let _ = writeln!(err);
                }
            }
        }
    }
}
