use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Exact class multiplication in alternating groups.
#[derive(Parser, Debug)]
#[command(name = "anclass", version, about)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build, export or import the character table of A_n.
    Table {
        n: usize,
        /// Write the table to this file.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Read a table from this file instead of building it.
        #[arg(long, env = "ANCLASS_TABLE")]
        import: Option<PathBuf>,
        /// Largest degree to build.
        #[arg(long, default_value_t = anclass::characters::DEFAULT_TABLE_LIMIT)]
        limit: usize,
    },
    /// Run a verification suite.
    Verify {
        /// gleason, ancn, prop24, construction, oracle-equiv, bounds or split-coverage-report.
        suite: String,
        /// Degrees, e.g. "7,9,11" or "8..16".
        #[arg(long = "n")]
        ns: Option<String>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Factor an element of cycle type MU as a product of two elements of cycle type LAMBDA.
    Witness {
        lambda: String,
        mu: String,
        /// Skip the fixed-point requirement.
        #[arg(long)]
        best_effort: bool,
        /// Seed for the randomized n-cycle search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = anclass::constructor::DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Valid-sequence cache, read before and written after the run.
        #[arg(long, env = "ANCLASS_SEQUENCE_CACHE")]
        sequence_cache: Option<PathBuf>,
    },
    /// Number of pairs (c, d) in C x D with c d = g, for a fixed g in class G.
    Frob { n: usize, c: String, d: String, g: String },
    /// Nontrivial classes missed by the product C D.
    Covers { n: usize, c: String, d: String },
    /// Least k with C^k = A_n.
    Cn { n: usize, c: String },
    /// Exact reports on the analytic estimates.
    Bounds {
        #[arg(value_enum)]
        report: BoundsReport,
        /// Degrees, e.g. "13" or "13..201".
        #[arg(long = "n")]
        ns: Option<String>,
        /// Hook size for the hook report.
        #[arg(long)]
        k: Option<usize>,
        /// Cycle type for the orbit-profile report.
        #[arg(long)]
        cycle_type: Option<String>,
        /// Emit CSV clause values over the range.
        #[arg(long)]
        table: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundsReport {
    Prop24,
    Hook,
    Amgm,
    SplitDegree,
    EProfile,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
