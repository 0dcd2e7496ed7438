mod cache;
mod commands;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtsieve::combinatorics::{Composition, Partition};

#[derive(Parser, Debug)]
#[command(
    name = "qtsieve",
    version,
    about = "Exact (q,t)-Kostka data and cyclic sieving checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// File caching computed (q,t)-Kostka tables.
    #[arg(long, env = "QTSIEVE_CACHE", global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Rect3,
    Content2,
    Content3,
    Perm4,
}

#[derive(Args, Debug, Clone)]
pub struct CspArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    /// Content of the matrices (content2, content3).
    #[arg(long)]
    nu: Option<Composition>,
    /// Translation step (content3) or column block width (perm4).
    #[arg(short = 'a')]
    a: Option<usize>,
    /// Number of column blocks (perm4).
    #[arg(short = 'b')]
    b: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of n.
    Partitions {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Kostka number K_{λ,ν}.
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        nu: Composition,
    },
    /// Fake degree polynomial f^λ(z).
    FakeDegree {
        #[arg(long)]
        lambda: Partition,
    },
    /// Cocharge Kostka polynomial K̃_{λ,ν}(z).
    CochargeKostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        nu: Composition,
    },
    /// Table of K̃_{λ,μ}(q,t) over all λ.
    QtKostka {
        #[arg(long)]
        mu: Partition,
    },
    /// Table of K̃_{λ,ν}(z) over all λ, from the t = 0 specialization.
    HlKostka {
        #[arg(long)]
        nu: Composition,
    },
    /// Compare fixed-point counts with polynomial evaluations.
    CspVerify {
        #[command(flatten)]
        params: CspArgs,
        /// Largest allowed mn.
        #[arg(long, default_value_t = qtsieve::csp::DEFAULT_SIZE_BOUND)]
        max_size: usize,
    },
    /// Print the sieving polynomial.
    CspPoly {
        #[command(flatten)]
        params: CspArgs,
    },
    /// Bigraded Hilbert series of the Garsia–Haiman module.
    GhHilbert {
        #[arg(long)]
        mu: Partition,
        /// Permit |μ| = 5.
        #[arg(long)]
        allow_n5: bool,
    },
    /// Run the invariant suite up to a size bound.
    Selftest {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

/// Exit codes: 0 success, 1 computation error, 2 usage error, 3 mismatch.
pub enum Outcome {
    Success,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(path) = &cli.cache {
        cache::load(path);
    }
    let result = commands::run(cli.command, cli.format);
    if let Some(path) = &cli.cache {
        if let Err(e) = cache::save(path) {
            eprintln!("warning: could not write cache {}: {e:#}", path.display());
        }
    }
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_usage(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn is_usage(e: &anyhow::Error) -> bool {
    use qtsieve::Error::*;
    match e.downcast_ref::<qtsieve::Error>() {
        Some(
            SizeMismatch { .. }
            | InvalidSymmetry { .. }
            | SizeBound { .. }
            | InvalidParameters(_)
            | InvalidPartition(_)
            | InvalidComposition(_),
        ) => true,
        Some(_) => false,
        None => e.downcast_ref::<commands::UsageError>().is_some(),
    }
}
