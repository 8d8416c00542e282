//! Command-line front end. Every subcommand produces a [`Report`]; exit
//! codes are 0 on success, 1 when a checked invariant fails and 2 for
//! usage, configuration or input errors.

mod commands;
pub mod dataset;
pub mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use dataset::{load_dataset, store_dataset, Dataset, DatasetError};
pub use report::{load_report, store_report, InvariantCheck, Report, RunConfig};

use crate::exact::PrimeField;

#[derive(Debug, Parser)]
#[command(name = "quartics", version, about = "Exact computations with nets of quadrics, quartic duality, W(E7) and theta characteristics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Prime field characteristic (default depends on the command).
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Sample count (smooth points, markings, …).
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long = "degree-bound", global = true)]
    degree_bound: Option<u32>,
    /// Input dataset (JSON); without it a seeded random instance is used.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cayley octads: base loci, projections, plane heptads.
    Octad {
        #[command(subcommand)]
        action: OctadCmd,
    },
    /// Hessian quartic of a net and its smoothness certificate.
    Hessian,
    /// The 28 bitangents of the Hessian from the chords of the octad.
    Bitangents,
    /// Steinerian points and the 28 secant checks.
    Steinerian,
    /// Dual hypersurfaces via the polar map.
    Dual {
        #[command(subcommand)]
        action: DualCmd,
    },
    /// Everywhere-tangency certificate for a pair of plane curves.
    Tangency,
    /// W(E7): counts and the degree-72 fiber.
    Weyl {
        #[command(subcommand)]
        action: WeylCmd,
    },
    /// Theta characteristics in the level-2 model.
    Theta {
        #[command(subcommand)]
        action: ThetaCmd,
    },
    /// The full verification suite.
    VerifyAll,
}

#[derive(Debug, Subcommand)]
enum OctadCmd {
    /// Base locus of a net of quadrics.
    Build,
    /// Project an octad from one of its points to a plane heptad.
    Project {
        /// Index (0-based) of the projection centre.
        #[arg(long, default_value_t = 7)]
        center: usize,
    },
    /// The octad associated with seven plane points.
    FromPlane,
}

#[derive(Debug, Subcommand)]
enum DualCmd {
    /// Interpolate the dual hypersurface.
    Fit,
    /// Interpolate and check that the dual of the dual is the original.
    Bidual,
    /// Scan the Heisenberg-invariant quartic surfaces for nodal members.
    NodalSearch {
        /// Number of singular points sought.
        #[arg(long, default_value_t = 16)]
        target: usize,
    },
}

#[derive(Debug, Subcommand)]
enum WeylCmd {
    Counts,
    Fiber,
}

#[derive(Debug, Subcommand)]
enum ThetaCmd {
    Counts,
    Aronhold,
}

/// Why a run ended without a report.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Dataset(DatasetError),
    Compute(crate::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Dataset(e) => write!(f, "invalid input: {e}"),
            CliError::Compute(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<DatasetError> for CliError {
    fn from(e: DatasetError) -> Self {
        CliError::Dataset(e)
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Compute(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(crate::Error::InvariantViolation(_)) => 1,
            _ => 2,
        }
    }
}

/// What a command handler returns before the report is assembled.
pub(crate) struct Outcome {
    results: serde_json::Value,
    invariants: Vec<InvariantCheck>,
    timings: BTreeMap<String, f64>,
}

pub(crate) struct Context {
    config: RunConfig,
    field: PrimeField,
    input: Option<PathBuf>,
}

fn default_prime(command: &Command) -> u64 {
    match command {
        Command::Dual { action: DualCmd::NodalSearch { .. } } => 11,
        Command::Dual { .. } => 499,
        _ => 101,
    }
}

fn command_name(command: &Command) -> String {
    match command {
        Command::Octad { action } => match action {
            OctadCmd::Build => "octad build",
            OctadCmd::Project { .. } => "octad project",
            OctadCmd::FromPlane => "octad from-plane",
        }
        .into(),
        Command::Hessian => "hessian".into(),
        Command::Bitangents => "bitangents".into(),
        Command::Steinerian => "steinerian".into(),
        Command::Dual { action } => match action {
            DualCmd::Fit => "dual fit",
            DualCmd::Bidual => "dual bidual",
            DualCmd::NodalSearch { .. } => "dual nodal-search",
        }
        .into(),
        Command::Tangency => "tangency".into(),
        Command::Weyl { action: WeylCmd::Counts } => "weyl counts".into(),
        Command::Weyl { action: WeylCmd::Fiber } => "weyl fiber".into(),
        Command::Theta { action: ThetaCmd::Counts } => "theta counts".into(),
        Command::Theta { action: ThetaCmd::Aronhold } => "theta aronhold".into(),
        Command::VerifyAll => "verify-all".into(),
    }
}

fn build_context(cli: &Cli) -> Result<Context, CliError> {
    let o = &cli.opts;
    let prime = o.prime.unwrap_or_else(|| default_prime(&cli.command));
    let field = PrimeField::new(prime).map_err(|e| CliError::Usage(format!("--prime {prime}: {e}")))?;
    let (default_samples, default_bound) = match &cli.command {
        Command::Dual { action: DualCmd::NodalSearch { .. } } => (400, 4),
        Command::Dual { .. } => (600, 12),
        Command::Weyl { .. } => (5, 4),
        Command::Steinerian => (10, 4),
        _ => (20, 4),
    };
    let samples = o.samples.unwrap_or(default_samples);
    let degree_bound = o.degree_bound.unwrap_or(default_bound);
    if samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    if degree_bound == 0 {
        return Err(CliError::Usage("--degree-bound must be positive".into()));
    }
    let mut extra = BTreeMap::new();
    match &cli.command {
        Command::Octad { action: OctadCmd::Project { center } } => {
            extra.insert("center".to_string(), (*center).into());
        }
        Command::Dual { action: DualCmd::NodalSearch { target } } => {
            extra.insert("target".to_string(), (*target).into());
        }
        _ => {}
    }
    let config = RunConfig {
        prime,
        seed: o.seed,
        samples,
        degree_bound,
        input: o.input.as_ref().map(|p| p.display().to_string()),
        out: o.out.as_ref().map(|p| p.display().to_string()),
        extra,
    };
    Ok(Context { config, field, input: o.input.clone() })
}

fn dispatch(command: &Command, ctx: &Context) -> Result<Outcome, CliError> {
    match command {
        Command::Octad { action: OctadCmd::Build } => commands::octad_build(ctx),
        Command::Octad { action: OctadCmd::Project { center } } => commands::octad_project(ctx, *center),
        Command::Octad { action: OctadCmd::FromPlane } => commands::octad_from_plane(ctx),
        Command::Hessian => commands::hessian(ctx),
        Command::Bitangents => commands::bitangents(ctx),
        Command::Steinerian => commands::steinerian(ctx),
        Command::Dual { action: DualCmd::Fit } => commands::dual_fit(ctx, false),
        Command::Dual { action: DualCmd::Bidual } => commands::dual_fit(ctx, true),
        Command::Dual { action: DualCmd::NodalSearch { target } } => commands::nodal_search(ctx, *target),
        Command::Tangency => commands::tangency(ctx),
        Command::Weyl { action: WeylCmd::Counts } => commands::weyl_counts(ctx),
        Command::Weyl { action: WeylCmd::Fiber } => commands::weyl_fiber(ctx),
        Command::Theta { action: ThetaCmd::Counts } => commands::theta_counts(ctx),
        Command::Theta { action: ThetaCmd::Aronhold } => commands::theta_aronhold(ctx),
        Command::VerifyAll => commands::verify_all(ctx),
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// `--out` if requested. Diagnostics go to stderr; the report is returned
/// for the caller to print.
pub fn run<I, T>(argv: I) -> (i32, Option<Report>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return (code, None);
        }
    };
    let ctx = match build_context(&cli) {
        Ok(ctx) => ctx,
        Err(e) => {
            eprintln!("{e}");
            return (e.exit_code(), None);
        }
    };
    let start = Instant::now();
    let outcome = match dispatch(&cli.command, &ctx) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{e}");
            return (e.exit_code(), None);
        }
    };
    let timings = cli.opts.timings.then(|| {
        let mut t = outcome.timings;
        t.insert("total".to_string(), start.elapsed().as_secs_f64());
        t
    });
    let report = Report {
        command: command_name(&cli.command),
        config: ctx.config,
        results: outcome.results,
        invariants: outcome.invariants,
        timings,
    };
    if let Some(path) = &cli.opts.out {
        if let Err(e) = store_report(path, &report) {
            eprintln!("cannot write {}: {e}", path.display());
            return (2, Some(report));
        }
    }
    if !report.passed() {
        eprintln!("invariant failure: {}", report.failures().join(", "));
        return (1, Some(report));
    }
    (0, Some(report))
}
