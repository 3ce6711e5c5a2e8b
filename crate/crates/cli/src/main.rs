mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use powerdom::Error;

/// Power domination polynomials of small graphs.
#[derive(Parser)]
#[command(name = "powerdom", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Power domination (and zero forcing, domination) polynomials.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Which::Pd)]
        which: Which,
    },
    /// Top coefficients p(G;n), ..., p(G;n-kmax) via non-dominating sets.
    Tail {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        kmax: usize,
    },
    /// Roots of the polynomial with classification and Rouché checks.
    Roots {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = powerdom::roots::DEFAULT_TOL)]
        tol: f64,
    },
    /// Polynomial of the threshold graph generated by a binary string.
    Threshold {
        #[arg(long)]
        bits: String,
    },
    /// Forts, their closed neighbourhoods, and the fort-count bound.
    Forts {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        ip_bound: bool,
    },
    /// Polynomial of a composed graph via the decomposition formulas.
    Decompose(DecomposeArgs),
    /// Audits over a graph6 catalog.
    Catalog(CatalogArgs),
    /// Prints a named family member as graph6.
    Gen {
        #[arg(long)]
        family: String,
        /// Family parameters, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<usize>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(long = "in", value_name = "FILE")]
    path: PathBuf,
    /// Input format; guessed from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Lattice,
    Plain,
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Pd,
    Zf,
    Dom,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Union,
    Join,
    Corona,
    DominatingVertex,
    Identify,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[command(flatten)]
    input: InputArgs,
    /// Second operand for union, join and corona.
    #[arg(long = "with", value_name = "FILE")]
    with: Option<PathBuf>,
    /// Gadget for identify, as FILE:ROOT; one per vertex of the input.
    #[arg(long = "gadget", value_name = "FILE:ROOT")]
    gadgets: Vec<String>,
    /// Check against enumeration (default when the result has at most 12 vertices).
    #[arg(long, overrides_with = "no_verify")]
    verify: bool,
    #[arg(long, overrides_with = "verify")]
    no_verify: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Audit {
    Unimodality,
    Uniqueness,
    Roots,
    Suite,
}

#[derive(Args)]
struct CatalogArgs {
    /// graph6 catalog, one graph per line (`-` for stdin).
    #[arg(long = "in", value_name = "FILE")]
    path: PathBuf,
    #[arg(long, value_enum)]
    audit: Audit,
    /// Assert the file holds every graph of its orders.
    #[arg(long)]
    complete: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Append-only results file; finished graphs are reused on rerun.
    #[arg(long, value_name = "FILE")]
    results: Option<PathBuf>,
    /// Also write one CSV row per graph.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// With `--audit suite`, also run the labeled suite up to this order.
    #[arg(long, value_name = "N")]
    labeled: Option<usize>,
    /// Report progress on stderr.
    #[arg(long)]
    progress: bool,
}

/// Failure with its exit status.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        Failure {
            code: 5,
            message: message.into(),
        }
    }

    pub fn partial(message: impl Into<String>) -> Self {
        Failure {
            code: 6,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => 4,
            Error::NumericFailure { .. } | Error::NotDivisible => 5,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn single_threaded() {
    // Fails only if a pool already exists, which cannot happen here.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build_global();
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Catalog(args) => {
            if let Some(jobs) = args.jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs.max(1))
                    .build_global()
                    .map_err(|e| Failure::input(e.to_string()))?;
            }
            commands::catalog(&args)
        }
        command => {
            single_threaded();
            match command {
                Command::Compute {
                    input,
                    method,
                    which,
                } => commands::compute(&input, method, which),
                Command::Tail { input, kmax } => commands::tail(&input, kmax),
                Command::Roots { input, tol } => commands::roots(&input, tol),
                Command::Threshold { bits } => commands::threshold(&bits),
                Command::Forts {
                    input,
                    minimal,
                    ip_bound,
                } => commands::forts(&input, minimal, ip_bound),
                Command::Decompose(args) => commands::decompose(&args),
                Command::Gen { family, params } => commands::gen(&family, &params),
                Command::Catalog(_) => unreachable!(),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("powerdom: {}", f.message.lines().next().unwrap_or("error"));
            ExitCode::from(f.code)
        }
    }
}
