mod input;
mod oracle;
mod poly;
mod render;
mod verify;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};

use chromatic_core::verify::SweepConfig;
use chromatic_core::Rational;

#[derive(Parser, Debug)]
#[command(name = "chromatic", version, about = "Chromatic polynomials and mean-size inequalities on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print P(G, x), the a_i, the mean size and the b_i of each input graph
    Poly {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the inequalities on every labelled graph up to --max-n, or on
    /// the graphs of --input
    Verify(verify::VerifyArgs),
    /// Compare the polynomial engine against an enumeration oracle
    Oracle {
        #[arg(value_enum)]
        which: OracleName,
        #[command(flatten)]
        source: Source,
        /// Seed for the random edge ranking of the broken-cycle oracles
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Input file, or `-` for stdin
    #[arg(short, long, default_value = "-")]
    input: String,
    /// Read the edge-list format (`n m` then `m` lines `u v`, labels from 1)
    /// instead of graph6
    #[arg(long)]
    edge_list: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OracleName {
    Whitney,
    Stanley,
    Gz,
    Partition,
    #[value(alias = "orientations")]
    Orientation,
}

impl OracleName {
    fn oracle(self) -> chromatic_core::verify::Oracle {
        use chromatic_core::verify::Oracle;
        match self {
            OracleName::Whitney => Oracle::Whitney,
            OracleName::Stanley => Oracle::Stanley,
            OracleName::Gz => Oracle::GreeneZaslavsky,
            OracleName::Partition => Oracle::Partition,
            OracleName::Orientation => Oracle::Orientation,
        }
    }
}

/// Parses a negative rational such as `-1/4`, `-2` or `-0.5`.
fn negative_rational(text: &str) -> Result<Rational, String> {
    let value = chromatic_core::scalar::parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational"))?;
    if value >= Rational::from_integer(0.into()) {
        return Err(format!("grid point {text} is not negative"));
    }
    Ok(value)
}

fn default_budget() -> usize {
    SweepConfig::LABELED_BUDGET
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Poly { source, format } => poly::run(&source, format),
        Command::Verify(args) => verify::run(args),
        Command::Oracle { which, source, seed, format } => oracle::run(which.oracle(), &source, seed, format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}
