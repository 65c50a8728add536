//! `qcd`: command-line front end for qcd-core.
//!
//! Exit status is 0 on success, 2 on a usage error (bad flags, unreadable
//! files, syntax errors in values) and 1 when a computation fails, including
//! mathematically invalid input such as n not coprime to q. Failures also print
//! `{"error":{"kind":...,"detail":...}}` on stdout.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcd_core::format::error_json;
use qcd_core::Error;

#[derive(Parser)]
#[command(name = "qcd", version, about = "Exact tools for 2-quasi-cyclic codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Setting {
    /// Field as `q`, `p^m` or `p^m:c0,c1,..,cm` (modulus coefficients, ascending).
    #[arg(long)]
    pub field: String,
    /// Code length n, coprime to q.
    #[arg(long)]
    pub n: usize,
}

/// A Goursat datum, either from supports and `g` or from a JSON file.
#[derive(Args, Clone)]
pub struct DataArgs {
    /// Support of C1 as comma-separated idempotent indices.
    #[arg(long, value_name = "I,J,..", allow_hyphen_values = true)]
    pub c1: Option<String>,
    #[arg(long, value_name = "I,J,..")]
    pub c2: Option<String>,
    #[arg(long, value_name = "I,J,..")]
    pub c12: Option<String>,
    /// Unit g as ascending coefficients, e.g. `1,w,w^2`; defaults to the identity of C12.
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    /// Goursat JSON file (`-` for stdin) instead of the flags above.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["c1", "c2", "c12", "g"])]
    pub data: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a finite field and list its elements.
    Field {
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Factor x^n - 1 into monic irreducibles.
    Factor {
        #[command(flatten)]
        at: Setting,
        #[arg(long)]
        json: bool,
    },
    /// Primitive idempotents of F[x]/(x^n - 1) and the bar permutation.
    Idempotents {
        #[command(flatten)]
        at: Setting,
        #[arg(long)]
        json: bool,
    },
    /// Operations on the cyclic code with a given idempotent support.
    Cyclic {
        #[command(flatten)]
        at: Setting,
        #[arg(long, default_value = "")]
        support: String,
        #[arg(long, value_enum)]
        op: CyclicOp,
        #[arg(long)]
        json: bool,
    },
    /// Build a code from Goursat data; prints its generator matrix.
    Construct {
        #[command(flatten)]
        at: Setting,
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        json: bool,
    },
    /// Goursat data of the code spanned by the rows of a `k x 2n` matrix file.
    Decompose {
        #[command(flatten)]
        at: Setting,
        #[arg(long, value_name = "PATH")]
        gens: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a structural predicate on a code.
    Check {
        #[command(flatten)]
        at: Setting,
        #[command(flatten)]
        data: DataArgs,
        /// Generator matrix file, instead of Goursat data.
        #[arg(long, value_name = "PATH", conflicts_with = "data")]
        gens: Option<PathBuf>,
        #[arg(long, value_enum)]
        what: Predicate,
        #[arg(long)]
        json: bool,
    },
    /// Word-level checks on a generator matrix, independent of the algebra.
    Oracle {
        #[arg(long)]
        field: String,
        #[arg(long, value_name = "PATH")]
        genmat: PathBuf,
        #[arg(long, value_enum)]
        check: OracleCheck,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the self-dual codes at (q, n) and evaluate the six criteria.
    Classify {
        #[command(flatten)]
        at: Setting,
        /// Enumeration cap; overrides QCD_CAP.
        #[arg(long)]
        cap: Option<u128>,
        /// Print JSON, or write it to PATH when one is given.
        #[arg(long, value_name = "PATH", num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
    },
    /// One classification report per grid point, as JSON lines.
    Sweep {
        #[arg(long, value_enum, default_value = "default")]
        grid: Grid,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Rebuild one of the built-in worked examples.
    Repro {
        #[arg(value_enum)]
        example: Example,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CyclicOp {
    Dual,
    Lcd,
    Selforth,
    Genmat,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Predicate {
    Selfdual,
    Dihedral,
    Constadihedral,
    Doublecirculant,
    Principal,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum OracleCheck {
    Selfdual,
    Yclosed,
    Ytildeclosed,
    Dc,
    Shift,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Grid {
    /// q in {2,4,8,3,5,9,13}, n <= 15, cap 10^7.
    Default,
    /// q in {2,4,3,5}, n <= 7, cap 10^6.
    Small,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Example {
    #[value(name = "example-1.1")]
    E11,
    #[value(name = "example-5.5")]
    E55,
    #[value(name = "example-6.5")]
    E65,
}

/// Why a command failed.
pub enum Failure {
    Usage(Error),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e),
            e => Failure::Compute(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let res = match cli.command {
        Command::Field { field, json } => commands::field(&mut out, &field, json),
        Command::Factor { at, json } => commands::factor(&mut out, &at, json),
        Command::Idempotents { at, json } => commands::idempotents(&mut out, &at, json),
        Command::Cyclic { at, support, op, json } => commands::cyclic(&mut out, &at, &support, op, json),
        Command::Construct { at, data, json } => commands::construct(&mut out, &at, &data, json),
        Command::Decompose { at, gens, json } => commands::decompose(&mut out, &at, &gens, json),
        Command::Check { at, data, gens, what, json } => {
            commands::check(&mut out, &at, &data, gens.as_deref(), what, json)
        }
        Command::Oracle { field, genmat, check, json } => {
            commands::oracle(&mut out, &field, &genmat, check, json)
        }
        Command::Classify { at, cap, json } => commands::classify(&mut out, &at, cap, json),
        Command::Sweep { grid, cap } => commands::sweep(grid, cap),
        Command::Repro { example, json } => commands::repro(&mut out, example, json),
    };
    print!("{out}");
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            println!("{}", error_json(&e));
            eprintln!("qcd: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            println!("{}", error_json(&e));
            eprintln!("qcd: {e}");
            ExitCode::from(1)
        }
    }
}
