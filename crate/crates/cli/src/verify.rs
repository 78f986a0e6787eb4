use std::io::{self, Write};

use anyhow::{Context, Result};
use clap::Args;
use serde_json::json;

use chromatic_core::verify::{
    default_grid, labeled_graphs, sweep, Oracle, SweepConfig, SweepEvent, SweepSummary, Theorem, VerificationReport,
    Witness,
};
use chromatic_core::Rational;

use crate::render::{parse_error, rational_text};
use crate::{default_budget, input, negative_rational, Format, Source};

const CHECKS: [Theorem; 4] = [Theorem::EpsilonBounds, Theorem::CompareK, Theorem::CompareQ, Theorem::PositiveD];

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Check the graphs in this file (`-` for stdin) instead of enumerating
    #[arg(short, long, conflicts_with = "max_n")]
    input: Option<String>,
    /// Read the edge-list format instead of graph6
    #[arg(long, requires = "input")]
    edge_list: bool,
    /// Enumerate every labelled graph with 1 to N vertices
    #[arg(long, value_name = "N", value_parser = max_order)]
    max_n: Option<usize>,
    /// Negative sample points for the grid certificate
    #[arg(long, value_delimiter = ',', value_parser = negative_rational, allow_hyphen_values = true)]
    grid: Vec<Rational>,
    /// Checks to run: epsilon-bounds, compare-k, compare-q, positive-d or all
    #[arg(long, value_delimiter = ',', value_parser = theorem, default_value = "epsilon-bounds,positive-d")]
    theorem: Vec<Vec<Theorem>>,
    /// Oracles to cross-check: whitney, stanley, gz, partition, orientation,
    /// all or none
    #[arg(long, value_delimiter = ',', value_parser = oracle, default_value = "none")]
    oracles: Vec<Vec<Oracle>>,
    /// Worker threads; 0 uses every core
    #[arg(long, env = "CHROMATIC_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Print only the summary
    #[arg(long)]
    summary_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn max_order(text: &str) -> Result<usize, String> {
    let n: usize = text.parse().map_err(|_| format!("`{text}` is not an order"))?;
    let budget = default_budget();
    if !(1..=budget).contains(&n) {
        return Err(format!("order must be between 1 and {budget}; larger sweeps need --input"));
    }
    Ok(n)
}

fn theorem(text: &str) -> Result<Vec<Theorem>, String> {
    let text = text.trim().to_ascii_lowercase();
    if text == "all" {
        return Ok(CHECKS.to_vec());
    }
    CHECKS
        .into_iter()
        .find(|t| t.name() == text)
        .map(|t| vec![t])
        .ok_or_else(|| format!("unknown check `{text}`"))
}

fn oracle(text: &str) -> Result<Vec<Oracle>, String> {
    let text = text.trim().to_ascii_lowercase();
    match text.as_str() {
        "all" => Ok(Oracle::ALL.to_vec()),
        "none" => Ok(Vec::new()),
        "orientations" => Ok(vec![Oracle::Orientation]),
        name => Oracle::from_name(name).map(|o| vec![o]).ok_or_else(|| format!("unknown oracle `{name}`")),
    }
}

fn dedup<T: PartialEq + Copy>(groups: Vec<Vec<T>>) -> Vec<T> {
    let mut out = Vec::new();
    for item in groups.into_iter().flatten() {
        if !out.contains(&item) {
            out.push(item);
        }
    }
    out
}

pub fn run(args: VerifyArgs) -> Result<bool> {
    let config = SweepConfig {
        theorems: dedup(args.theorem),
        oracles: dedup(args.oracles),
        grid: if args.grid.is_empty() { default_grid() } else { args.grid },
        ..SweepConfig::default()
    };
    rayon::ThreadPoolBuilder::new().num_threads(args.jobs).build_global().context("cannot start worker pool")?;

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut failure = None;
    let mut emit = |event: SweepEvent<'_>| {
        if failure.is_some() {
            return;
        }
        let written = match (event, args.format) {
            (SweepEvent::Report(report), _) if args.summary_only && !report_is_problem(report) => Ok(()),
            (SweepEvent::Report(report), Format::Json) => {
                writeln!(out, "{}", serde_json::to_string(report).expect("reports serialize"))
            }
            (SweepEvent::Report(report), Format::Text) => writeln!(out, "{}", report_text(report)),
            (SweepEvent::Error(error), Format::Json) => writeln!(out, "{}", parse_error(error)),
            (SweepEvent::Error(error), Format::Text) => writeln!(out, "error: {error}"),
        };
        if let Err(error) = written {
            failure = Some(error);
        }
    };

    let summary = match args.input {
        Some(path) => {
            let source = Source { input: path, edge_list: args.edge_list };
            let records = input::records(&source)?.map(|r| r.map(|record| record.graph));
            sweep(records, &config, &mut emit)
        }
        None => {
            let max_n = args.max_n.unwrap_or(5);
            sweep(labeled_graphs(max_n), &config, &mut emit)
        }
    };
    if let Some(error) = failure {
        if error.kind() != io::ErrorKind::BrokenPipe {
            return Err(error.into());
        }
    }
    match args.format {
        Format::Json => writeln!(out, "{}", json!({ "summary": summary }))?,
        Format::Text => write!(out, "{}", summary_text(&summary))?,
    }
    Ok(summary.is_clean())
}

fn report_is_problem(report: &VerificationReport) -> bool {
    use chromatic_core::verify::Outcome;
    matches!(report.outcome, Outcome::Violation | Outcome::Inconclusive)
}

fn exact(text: &str) -> String {
    match chromatic_core::scalar::parse_rational(text) {
        Some(value) => rational_text(&value),
        None => text.to_owned(),
    }
}

fn report_text(report: &VerificationReport) -> String {
    let mut line = format!("{:<10} n={} {:<26} {}", report.graph6, report.n, report.theorem, report.outcome);
    if let Some(kind) = &report.certificate_kind {
        line += &format!(" [{}]", serde_json::to_value(kind).expect("serializes").as_str().unwrap_or_default());
    }
    match &report.witness {
        None => {}
        Some(Witness::Point { x, value }) => line += &format!(" at x={}: {}", exact(x), exact(value)),
        Some(Witness::Index { i, value }) => line += &format!(" at i={i}: {value}"),
        Some(Witness::Vector { name, values }) => line += &format!(" {name}=({})", values.join(", ")),
        Some(Witness::Bounds { lower, value, upper }) => {
            line += &format!(" {} < {} < {}", exact(lower), exact(value), exact(upper))
        }
        Some(Witness::Message { text }) => line += &format!(" ({text})"),
    }
    line
}

fn summary_text(summary: &SweepSummary) -> String {
    let mut text = format!("graphs: {}  parse errors: {}\n", summary.graphs, summary.parse_errors);
    for (theorem, counts) in &summary.by_theorem {
        text += &format!(
            "{:<26} holds {:>8}  equality {:>8}  inconclusive {:>6}  violation {:>4}\n",
            theorem.name(),
            counts.holds,
            counts.equality_case,
            counts.inconclusive,
            counts.violation
        );
    }
    text
}
