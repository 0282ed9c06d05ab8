//! `hilbchar`: Hilbert polynomials, complete intersections, SAT reductions
//! and transversality checks from the command line.
//!
//! Exit codes: 0 success, 1 internal error, 2 routes disagree, 3 resource
//! cap reached, 4 unreadable or malformed input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hilbchar", version, about = "Hilbert polynomials computed and cross-checked by independent routes")]
struct Cli {
    /// Seed for every pseudo-random choice (flags, generic forms).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Abort once a Gröbner basis has more elements than this.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_basis: usize,
    /// Abort once an S-polynomial exceeds this degree.
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: u32,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert polynomial, degree and genus of a homogeneous ideal file.
    Hilbert { file: PathBuf },
    /// Hilbert polynomial of a complete intersection by three routes.
    /// Arguments: `n d1 d2 ...` or `n=4 degrees=2,3`.
    Ci {
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Projective characters deg P_λ of a complete intersection.
    Characters {
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Table of the coefficients δ^{m,k}_μ (μ_1 <= n - m; n defaults to 2m).
    Delta { m: u32, k: u32, n: Option<u32> },
    /// Todd polynomial T_m in c1..cm.
    Todd { m: usize },
    /// Ideal of a DIMACS CNF formula, with model counts by three routes.
    ReduceSat {
        file: PathBuf,
        /// Also write the ideal file here.
        #[arg(long)]
        ideal_out: Option<PathBuf>,
    },
    /// Ideal membership of a polynomial, by normal form and by Hilbert polynomials.
    Membership { file: PathBuf, poly: String },
    /// Number of affine solutions (with multiplicity) of an ideal file.
    Count { file: PathBuf },
    /// Transversality of the Gauss map to a Schubert cell at a point.
    Trans {
        file: PathBuf,
        /// Coordinates, e.g. `1,1,1` or `1,1/2,1/4`.
        #[arg(long)]
        point: String,
        /// Partition, e.g. `1` or `[2,1]`.
        #[arg(long, default_value = "[]")]
        partition: String,
        /// Dimension of the variety; defaults to n minus the number of equations.
        #[arg(long)]
        dim: Option<usize>,
        /// Leading flag basis vectors, `;`-separated (e.g. `3,2,1`); the rest is random.
        #[arg(long)]
        flag_prefix: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context {
        seed: cli.seed,
        cfg: hilbchar::grobner::GrobnerConfig {
            max_basis: cli.max_basis,
            max_degree: cli.max_degree,
        },
    };
    let result = match &cli.command {
        Command::Hilbert { file } => commands::hilbert(&ctx, file),
        Command::Ci { args } => commands::ci(&ctx, args),
        Command::Characters { args } => commands::characters(&ctx, args),
        Command::Delta { m, k, n } => commands::delta(&ctx, *m, *k, *n),
        Command::Todd { m } => commands::todd(&ctx, *m),
        Command::ReduceSat { file, ideal_out } => commands::reduce_sat(&ctx, file, ideal_out.as_deref()),
        Command::Membership { file, poly } => commands::membership(&ctx, file, poly),
        Command::Count { file } => commands::count(&ctx, file),
        Command::Trans {
            file,
            point,
            partition,
            dim,
            flag_prefix,
        } => commands::trans(&ctx, file, point, partition, *dim, flag_prefix.as_deref()),
    };
    match result {
        Ok(report) => {
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&report.json).unwrap()),
                Output::Text => println!("{}", report.text),
            }
            if report.agreement {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
