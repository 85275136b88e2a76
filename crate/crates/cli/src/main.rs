//! `copsi`: command-line front end for the connected partial symmetry index.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 feasibility cap exceeded.

mod commands;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "copsi",
    version,
    about = "Connected partial symmetry index of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the index of graphs given as graph6 (arguments, --file or
    /// stdin) or as a named family.
    Copsi(CopsiArgs),
    /// Evaluate a closed form.
    Formula {
        family: String,
        param: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// First COUNT values of a family's closed form.
    Sequence {
        family: String,
        count: usize,
        /// Split each star value into 2n(n+1) and psin(K_n).
        #[arg(long)]
        summands: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exhaustive search for the graphs with the largest index.
    Extremal(ExtremalArgs),
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        order_bound: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print a family member as graph6.
    Gen { family: String, param: usize },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutputArgs {
    /// One JSON object per line instead of tab-separated records.
    #[arg(long)]
    pub json: bool,
    /// Include wall-clock timings (makes output non-deterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct CopsiArgs {
    /// graph6 strings; read from --file or stdin when absent.
    graphs: Vec<String>,
    #[arg(long, conflicts_with_all = ["graphs", "family"])]
    file: Option<PathBuf>,
    #[arg(long, requires = "param", conflicts_with = "graphs")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    param: Option<usize>,
    #[arg(long, value_enum, default_value_t = EngineArg::Classes)]
    engine: EngineArg,
    /// Also report singleton / edge / remaining counts.
    #[arg(long)]
    breakdown: bool,
    /// Refuse hosts with more connected vertex subsets than this.
    #[arg(long, default_value_t = copsi_core::copsi::DEFAULT_SUBSET_CAP)]
    subset_cap: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "parameter")]
pub struct ExtremalTarget {
    /// Connected graphs with this many edges.
    #[arg(long)]
    by_size: Option<usize>,
    /// All graphs with this many vertices.
    #[arg(long)]
    by_order: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ExtremalArgs {
    #[command(flatten)]
    target: ExtremalTarget,
    /// Worker threads; the output does not depend on this.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineArg {
    Naive,
    Classes,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    Lemma,
    Engines,
    Formulas,
    All,
}

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Usage = 2,
    Cap = 3,
}

impl Status {
    /// Combines two outcomes, keeping the one to report.
    pub fn worst(self, other: Status) -> Status {
        // usage/parse errors outrank cap refusals, which outrank failures
        let rank = |s: Status| match s {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Cap => 2,
            Status::Usage => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let result = match cli.command {
        Command::Copsi(args) => commands::copsi(&args, &mut stdout),
        Command::Formula { family, param, out } => {
            commands::formula(&family, param, out, &mut stdout)
        }
        Command::Sequence {
            family,
            count,
            summands,
            out,
        } => commands::sequence(&family, count, summands, out, &mut stdout),
        Command::Extremal(args) => commands::extremal(&args, &mut stdout),
        Command::Verify {
            suite,
            order_bound,
            out,
        } => commands::verify(suite, order_bound, out, &mut stdout),
        Command::Gen { family, param } => commands::gen(&family, param, &mut stdout),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("copsi: {e}");
            ExitCode::from(Status::Failed as u8)
        }
    }
}
