//! `spectral-cycles`: count short cycles of bipartite graphs from the command line.

mod commands;
mod failure;
mod input;
mod json;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::failure::Failure;
use crate::input::InputFormat;

/// Thread count override for the parallel trace engine.
const THREADS_VAR: &str = "SPECTRAL_CYCLES_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "spectral-cycles",
    version,
    about = "Exact short-cycle counts for bipartite (Tanner) graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph file (alist or edge list).
    #[arg(short, long)]
    input: PathBuf,
    /// Override format detection by extension.
    #[arg(short, long, value_enum)]
    format: Option<InputFormat>,
    /// Emit a JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Arith {
    /// 128-bit integers, overflow is reported.
    #[default]
    I128,
    /// Arbitrary precision.
    Big,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count cycles of the requested lengths.
    Count {
        #[command(flatten)]
        io: InputArgs,
        /// Comma-separated even lengths, or `auto` for {g, g+2, g+4} where supported.
        #[arg(short, long, default_value = "auto")]
        lengths: String,
        #[arg(long, value_enum, default_value_t)]
        arith: Arith,
    },
    /// Girth, degree class and sizes.
    Girth {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Exact tr(A^k) for k = 1..=kmax.
    Traces {
        #[command(flatten)]
        io: InputArgs,
        #[arg(short, long)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t)]
        arith: Arith,
        /// Also compare against the floating-point spectrum.
        #[arg(long)]
        spectrum: bool,
    },
    /// Brute-force cycle counts by backtracking.
    Oracle {
        #[command(flatten)]
        io: InputArgs,
        #[arg(short, long)]
        max_len: usize,
        /// Partial paths the search may extend before giving up.
        #[arg(long, default_value_t = spectral_cycles::oracle::DEFAULT_CYCLE_BUDGET)]
        budget: u64,
    },
    /// Compare trace-based counts with the backtracking oracle.
    Verify {
        #[command(flatten)]
        io: InputArgs,
        #[arg(short, long)]
        max_len: usize,
        #[arg(long, default_value_t = spectral_cycles::oracle::DEFAULT_CYCLE_BUDGET)]
        budget: u64,
    },
    /// Generate a seeded random graph.
    Gen {
        /// complete:A,B | biregular:N,DV,DC | varregular:N,DV,LO,HI | irregular:N,M,P
        #[arg(short, long)]
        kind: commands::KindArg,
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        min_girth: Option<usize>,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(short, long, value_enum, default_value = "edgelist")]
        format: InputFormat,
    },
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Input(format!("{THREADS_VAR}={raw:?} is not a thread count")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Count { io, lengths, arith } => {
            let g = input::load(&io.input, io.format)?;
            let lengths = commands::parse_lengths(&lengths)?;
            match arith {
                Arith::I128 => commands::count::<spectral_cycles::Count>(&g, &io, lengths),
                Arith::Big => commands::count::<spectral_cycles::BigCount>(&g, &io, lengths),
            }
        }
        Command::Girth { io } => commands::girth(&input::load(&io.input, io.format)?, &io),
        Command::Traces {
            io,
            kmax,
            arith,
            spectrum,
        } => {
            let g = input::load(&io.input, io.format)?;
            match arith {
                Arith::I128 => commands::traces::<spectral_cycles::Count>(&g, &io, kmax, spectrum),
                Arith::Big => {
                    commands::traces::<spectral_cycles::BigCount>(&g, &io, kmax, spectrum)
                }
            }
        }
        Command::Oracle {
            io,
            max_len,
            budget,
        } => commands::oracle(&input::load(&io.input, io.format)?, &io, max_len, budget),
        Command::Verify {
            io,
            max_len,
            budget,
        } => commands::verify(&input::load(&io.input, io.format)?, &io, max_len, budget),
        Command::Gen {
            kind,
            seed,
            min_girth,
            out,
            format,
        } => commands::gen(kind, seed, min_girth, out.as_deref(), format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("spectral-cycles: {failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
