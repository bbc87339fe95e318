//! `splitcert`: certify and search for SPS and splitting divisors of double
//! covers of projective space.
//!
//! Exit codes: 0 found/valid, 1 not found/invalid, 2 input error. Output is
//! a JSON run report on stdout unless `--pretty` is given.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{render_pretty, InputError, Inputs, RunReport, TOOL_VERSION};

pub const DEFAULT_SEED: u64 = 0x5eed;

const HYPOTHESES_HELP: &str = "Input divisors are assumed irreducible; this is not checked. \
For splitting certificates the SPS basis is assumed to generate the class group together \
with the hyperplane class; this is recorded in every report as an asserted hypothesis.";

#[derive(Parser, Debug)]
#[command(name = "splitcert", version, about, after_help = HYPOTHESES_HELP)]
struct Cli {
    /// Print human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for randomized internals.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker thread cap.
    #[arg(long, global = true, env = "SPLITCERT_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CoverArgs {
    /// File holding the branch equation F.
    #[arg(long)]
    pub cover: PathBuf,
    /// Half the degree of F.
    #[arg(short = 'l', long = "l")]
    pub l: u32,
    /// Dimension n of the projective space (n + 1 variables).
    #[arg(short = 'n', long = "dim", default_value_t = 2)]
    pub n: usize,
    /// Coefficient field: `q` or `fp:P`.
    #[arg(long, default_value = "q")]
    pub field: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    /// Restriction to a line (a).
    #[value(alias = "a")]
    Restriction,
    /// Parametrization of a conic (b).
    #[value(alias = "b")]
    Conic,
    /// Exhaustion over a finite field (c).
    #[value(alias = "c")]
    Exhaustion,
}

#[derive(Args, Debug, Clone)]
pub struct SpsArgs {
    #[command(flatten)]
    pub cover: CoverArgs,
    /// File holding the divisor equation f.
    #[arg(long)]
    pub divisor: PathBuf,
    /// Allow a nonsquare unit, i.e. certify over the algebraic closure.
    #[arg(long)]
    pub closure: bool,
    /// Rational point `a,b,c` on a conic divisor.
    #[arg(long)]
    pub point: Option<String>,
    /// Verify this certificate instead of searching.
    #[arg(long)]
    pub cert: Option<PathBuf>,
    #[arg(long, default_value_t = splitcert::sps::DEFAULT_MAX_CANDIDATES)]
    pub max_candidates: u128,
}

#[derive(Args, Debug, Clone)]
pub struct SpsSearchArgs {
    #[command(flatten)]
    pub sps: SpsArgs,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
}

#[derive(Args, Debug, Clone)]
pub struct SplitVerifyArgs {
    /// Certificate JSON, or a split-search report containing one.
    #[arg(long)]
    pub cert: PathBuf,
    /// Branch equation file; taken from the report when omitted.
    #[arg(long)]
    pub cover: Option<PathBuf>,
    #[arg(short = 'l', long = "l")]
    pub l: Option<u32>,
    #[arg(short = 'n', long = "dim")]
    pub n: Option<usize>,
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub divisor: Option<PathBuf>,
    /// Comma-separated SPS basis files.
    #[arg(long, value_delimiter = ',')]
    pub sps: Vec<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SplitSearchArgs {
    #[command(flatten)]
    pub cover: CoverArgs,
    #[arg(long)]
    pub divisor: PathBuf,
    /// Comma-separated SPS basis files.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sps: Vec<PathBuf>,
    /// Bound on the sum of the exponents.
    #[arg(long)]
    pub max_exp: u32,
    /// Bound on the grade k.
    #[arg(long)]
    pub max_k: u32,
    /// Combine the searches modulo the given primes into a certificate over Q.
    #[arg(long)]
    pub lift_to_q: bool,
    #[arg(long, default_value_t = splitcert::sps::DEFAULT_MAX_CANDIDATES)]
    pub max_candidates: u128,
}

#[derive(Args, Debug, Clone)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub cover: CoverArgs,
    #[arg(long)]
    pub degree: u32,
    #[arg(long, default_value_t = splitcert::sps::DEFAULT_MAX_CANDIDATES)]
    pub max_candidates: u128,
    /// Permit degrees above l.
    #[arg(long)]
    pub allow_over_bound: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingOp {
    Mul,
    Norm,
    Conj,
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    #[arg(value_enum)]
    pub op: RingOp,
    #[command(flatten)]
    pub cover: CoverArgs,
    /// Element as JSON `{"p":..,"q":..,"k":..}` or a file holding it.
    #[arg(long = "elem", required = true)]
    pub elems: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify that a divisor is SPS, or verify a given certificate.
    SpsCheck(SpsArgs),
    /// Search for an SPS certificate with a chosen strategy.
    SpsSearch(SpsSearchArgs),
    /// Verify a splitting certificate.
    SplitVerify(SplitVerifyArgs),
    /// Bounded search for a splitting certificate over GF(p).
    SplitSearch(SplitSearchArgs),
    /// Enumerate SPS divisors of a given degree over GF(p).
    EnumerateSps(EnumerateArgs),
    /// Arithmetic in the coordinate ring of the cover.
    Ring(RingArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::SpsCheck(_) => "sps-check",
            Command::SpsSearch(_) => "sps-search",
            Command::SplitVerify(_) => "split-verify",
            Command::SplitSearch(_) => "split-search",
            Command::EnumerateSps(_) => "enumerate-sps",
            Command::Ring(_) => "ring",
        }
    }
}

/// Write a line to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn emit_error(subcommand: &str, err: &InputError, pretty: bool) -> ExitCode {
    if pretty {
        let mut line = format!("error ({}): {}", err.kind, err.message);
        if let Some(f) = &err.file {
            line.push_str(&format!(" [{f}"));
            if let Some(p) = err.position {
                line.push_str(&format!(" at {p}"));
            }
            line.push(']');
        }
        emit(&line);
    } else {
        emit(&err.to_json(subcommand).to_string());
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let pretty = std::env::args().any(|a| a == "--pretty");
            let text = e.render().to_string();
            let message = text.trim().strip_prefix("error: ").unwrap_or(text.trim()).to_string();
            return emit_error("", &InputError::new(message), pretty);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return emit_error(
                cli.command.name(),
                &InputError::new("--jobs must be positive"),
                cli.pretty,
            );
        }
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }

    let name = cli.command.name();
    let mut inputs = Inputs::default();
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::SpsCheck(a) => commands::sps(a, StrategyArg::Auto, &mut inputs),
        Command::SpsSearch(a) => commands::sps(&a.sps, a.strategy, &mut inputs),
        Command::SplitVerify(a) => commands::split_verify(a, &mut inputs),
        Command::SplitSearch(a) => commands::split_search(a, &mut inputs),
        Command::EnumerateSps(a) => commands::enumerate(a, cli.seed, &mut inputs),
        Command::Ring(a) => commands::ring(a, &mut inputs),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return emit_error(name, &e, cli.pretty),
    };
    let report = RunReport {
        subcommand: name.to_string(),
        tool_version: TOOL_VERSION,
        field: outcome.field,
        inputs,
        bounds: outcome.bounds,
        seed: cli.seed,
        result: outcome.result,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
        asserted_hypotheses: outcome.hypotheses,
        warnings: outcome.warnings,
    };
    if cli.pretty {
        match &cli.command {
            Command::Ring(_) => emit(&commands::ring_pretty(&report.result)),
            _ => emit(render_pretty(&report).trim_end()),
        }
    } else {
        emit(&serde_json::to_string_pretty(&report).expect("serializable"));
    }
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
