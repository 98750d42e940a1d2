//! Command-line front end.
//!
//! Exit codes: 0 all checks pass, 1 a check fails, 2 malformed input,
//! 3 contour or precondition error.

mod commands;
pub mod suites;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{arch_report, nonarch_report, read_json_arg, run_report};
pub use suites::{arch_checks, nonarch_checks, ArchConfig, NonarchConfig, SuiteReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONTOUR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lforge",
    version,
    about = "Local L-factor identities: exact series checks and Mellin-Barnes quadrature"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the inverse-root blocks and expansion of a local L-factor.
    Lfactor(LfactorArgs),
    /// Print the Whittaker zeta series at a place.
    Series(SeriesArgs),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifyCommand,
    },
    /// Merge report files into one summary.
    Report(ReportArgs),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Exact identities between Euler factors and Whittaker sums.
    Nonarch(NonarchArgs),
    /// Quadrature checks of the archimedean computation.
    Arch(ArchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "wedge2_std2")]
    Wedge2Std2,
    #[value(name = "sym2")]
    Sym2,
    #[value(name = "std4")]
    Std4,
    #[value(name = "tensor8")]
    Tensor8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlaceArg {
    Split,
    Inert,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StageArg {
    #[value(name = "after_barnes1")]
    AfterBarnes1,
    #[value(name = "full")]
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    R,
    C,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Print JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct LfactorArgs {
    /// Satake JSON: a file path, `-` for stdin, or an inline object.
    /// Missing groups default to the trivial class.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value = "wedge2_std2")]
    pub which: Which,
    #[arg(long, value_enum, default_value = "split")]
    pub place: PlaceArg,
    /// Truncation order of the expansion.
    #[arg(long, default_value_t = 8)]
    pub order: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value = "split")]
    pub place: PlaceArg,
    #[arg(long, default_value_t = 8)]
    pub order: u32,
    /// Omit the L(2s, Sym^2 x omega) factor.
    #[arg(long)]
    pub bare: bool,
    /// Print the two-variable factor in `T` and `U` to this `U`-order
    /// instead (split place only).
    #[arg(long)]
    pub u_order: Option<u32>,
    /// Use generic symbols instead of `--input`.
    #[arg(long)]
    pub symbolic: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct NonarchArgs {
    #[arg(long, default_value_t = 8)]
    pub order: u32,
    #[arg(long, default_value_t = 50)]
    pub sweeps: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check the identities in generic symbols instead of random draws.
    #[arg(long)]
    pub symbolic: bool,
    /// Corrupt one inverse root of every right-hand side.
    #[arg(long)]
    pub mutate: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ArchArgs {
    #[arg(long, value_enum, default_value = "after_barnes1")]
    pub stage: StageArg,
    /// Overrides every per-check tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Random draws per lemma and field.
    #[arg(long, default_value_t = 20)]
    pub sweeps: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "both")]
    pub field: FieldArg,
    /// Parameters of the zeta check: `{"mu": [...], "nu": [...], "field": "R", "s": [1, 0]}`
    /// as a file path or inline JSON; complex numbers as `[re, im]`.
    #[arg(long)]
    pub params: Option<String>,
    /// Quadrature override `{"T": ..., "nodes": ...}`.
    #[arg(long)]
    pub quad: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    /// Report files written by `verify ... --out`.
    pub paths: Vec<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parses arguments and runs the command, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Lfactor(a) => commands::run_lfactor(&a),
        Command::Series(a) => commands::run_series(&a),
        Command::Verify {
            suite: VerifyCommand::Nonarch(a),
        } => commands::run_nonarch(&a),
        Command::Verify {
            suite: VerifyCommand::Arch(a),
        } => commands::run_arch(&a),
        Command::Report(a) => commands::run_report(&a.paths).and_then(|(doc, table, pass)| {
            commands::emit(&a.output, &doc, &table)?;
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

/// Applies `LFORGE_THREADS` to the global worker pool.
pub fn configure_threads() {
    if let Some(n) = std::env::var("LFORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}
