mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Affine Schubert combinatorics: bijections, weak strips, Pieri rules and
/// verification sweeps.
#[derive(Debug, Parser)]
#[command(name = "kschur", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Rank parameter k (the group is the affine symmetric group on k+1 letters).
    #[arg(long, global = true, default_value_t = 3)]
    k: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Directory for transition-table cache files.
    #[arg(long, global = true, env = "KSCHUR_TABLE_CACHE")]
    table_cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Shape {
    /// Comma-separated parts; `0` is the empty partition.
    #[arg(long, default_value = "0")]
    lambda: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bounded partition, core, Grassmannian element and k-codes.
    Bij {
        /// Comma-separated parts; without it, every shape up to --max-size.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Weak strips and affine set-valued strips of size r over a shape.
    Strips {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Pieri expansion of a basis element times h_r.
    Pieri {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t = PieriBasis::Kk)]
        basis: PieriBasis,
    },
    /// Strong-sum Pieri product in interval-union and inclusion-exclusion form.
    Gtilde {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Also factor through the k-rectangle R_t.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[arg(value_enum)]
        sweep: Sweep,
        /// Shape size bound, or element length bound for order-props and fibers.
        #[arg(long)]
        max_size: Option<usize>,
        /// Length bound for triples in order-props.
        #[arg(long)]
        triple_len: Option<usize>,
    },
    /// Pairs (v, A) with d_A * v = u and their signs.
    Table1 {
        /// Reduced word of u, comma-separated letters.
        #[arg(long)]
        u: String,
        /// Reduced word of w; keeps only rows with v <= w.
        #[arg(long)]
        w: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PieriBasis {
    /// k-Schur functions.
    Ks,
    /// K-k-Schur functions.
    Kk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    PieriSum,
    Factorization,
    TopDegree,
    ProductSupport,
    OrderProps,
    Fibers,
}

/// Validated run parameters shared by all subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub k: usize,
    pub format: Format,
    pub jobs: usize,
    pub table_cache: Option<PathBuf>,
}

pub const MAX_K: usize = 8;
pub const MAX_SIZE: usize = 12;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        k: cli.k,
        format: cli.format,
        jobs: cli.jobs,
        table_cache: cli.table_cache,
    };
    let outcome = commands::run(&cli.command, &config);
    match outcome {
        Ok((out, passed)) => match out.render(config.format) {
            Ok(s) => {
                print!("{s}");
                if passed {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
