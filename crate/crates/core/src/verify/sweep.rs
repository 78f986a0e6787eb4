use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    check_compare_k, check_compare_q, check_oracle, check_pos_d, default_grid, Oracle, Outcome, Theorem,
    VerificationReport, VerifyError, Witness, ORACLE_MAX_ORDER,
};
use crate::chromatic::epsilon_mean;
use crate::graph::io::ParseError;
use crate::graph::{Graph, LabeledGraphs, VertexSet};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub theorems: Vec<Theorem>,
    pub oracles: Vec<Oracle>,
    pub grid: Vec<BigRational>,
    /// Graphs handed to the worker pool at a time.
    pub chunk_size: usize,
}

impl SweepConfig {
    /// Largest order enumerated internally: `2^21` labelled graphs at `n = 7`.
    pub const LABELED_BUDGET: usize = 7;
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            theorems: vec![Theorem::EpsilonBounds, Theorem::PositiveD],
            oracles: Vec::new(),
            grid: default_grid(),
            chunk_size: 4096,
        }
    }
}

/// Every labelled graph with `1 ≤ n ≤ max_n`.
pub fn labeled_graphs(max_n: usize) -> impl Iterator<Item = Result<Graph, ParseError>> {
    (1..=max_n).flat_map(LabeledGraphs::new).map(Ok)
}

fn error_report(g: &Graph, theorem: Theorem, error: VerifyError) -> VerificationReport {
    VerificationReport::new(g, theorem, Outcome::Inconclusive).with_witness(Witness::Message { text: error.to_string() })
}

/// `ε(T_n) < ε(G) < ε(K_n)` for connected graphs; trees and complete
/// graphs sit on the bounds.
fn epsilon_bounds(g: &Graph) -> Option<VerificationReport> {
    if !g.is_connected() {
        return None;
    }
    let report = |outcome| VerificationReport::new(g, Theorem::EpsilonBounds, outcome);
    if g.is_tree() || g.is_complete() {
        return Some(report(Outcome::EqualityCase));
    }
    let n = g.order();
    let means = (epsilon_mean(&Graph::path(n)), epsilon_mean(g), epsilon_mean(&Graph::complete(n)));
    let (lower, value, upper) = match means {
        (Ok(l), Ok(v), Ok(u)) => (l, v, u),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return Some(error_report(g, Theorem::EpsilonBounds, e.into())),
    };
    let outcome = if lower < value && value < upper { Outcome::Holds } else { Outcome::Violation };
    Some(report(outcome).with_witness(Witness::Bounds {
        lower: lower.to_string(),
        value: value.to_string(),
        upper: upper.to_string(),
    }))
}

/// A breadth-first spanning forest.
fn spanning_forest(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    let mut seen = VertexSet::new();
    for root in 0..g.order() {
        if !seen.insert(root) {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v).iter() {
                if seen.insert(w) {
                    edges.push((v, w));
                    queue.push_back(w);
                }
            }
        }
    }
    Graph::from_edges(g.order(), &edges).expect("edges of g")
}

/// A chordal proper spanning subgraph: a spanning forest when `G` has a
/// cycle, otherwise `G` minus its last edge.
fn chordal_spanning_subgraph(g: &Graph) -> Option<Graph> {
    if !g.is_forest() {
        return Some(spanning_forest(g));
    }
    let (u, v) = *g.edges().last()?;
    Some(g.delete_edge(u, v).expect("edge of g"))
}

/// All configured checks on one graph, in a fixed order.
pub fn check_graph(g: &Graph, config: &SweepConfig) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for &theorem in &config.theorems {
        let report = match theorem {
            Theorem::EpsilonBounds => epsilon_bounds(g),
            Theorem::PositiveD => Some(check_pos_d(g)),
            Theorem::CompareK if g.is_complete() => {
                Some(VerificationReport::new(g, theorem, Outcome::EqualityCase))
            }
            Theorem::CompareK => {
                Some(check_compare_k(g, &config.grid).unwrap_or_else(|e| error_report(g, theorem, e)))
            }
            Theorem::CompareQ => chordal_spanning_subgraph(g).map(|q| {
                check_compare_q(g, &q, &config.grid).unwrap_or_else(|e| error_report(g, theorem, e))
            }),
            other => Oracle::ALL
                .into_iter()
                .find(|o| o.theorem() == other)
                .filter(|_| g.order() <= ORACLE_MAX_ORDER)
                .map(|o| check_oracle(g, o).unwrap_or_else(|e| error_report(g, theorem, e))),
        };
        reports.extend(report);
    }
    if g.order() <= ORACLE_MAX_ORDER {
        for &oracle in &config.oracles {
            reports.push(check_oracle(g, oracle).unwrap_or_else(|e| error_report(g, oracle.theorem(), e)));
        }
    }
    reports
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OutcomeCounts {
    pub holds: u64,
    pub equality_case: u64,
    pub inconclusive: u64,
    pub violation: u64,
}

impl OutcomeCounts {
    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Holds => self.holds += 1,
            Outcome::EqualityCase => self.equality_case += 1,
            Outcome::Inconclusive => self.inconclusive += 1,
            Outcome::Violation => self.violation += 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub graphs: u64,
    pub parse_errors: u64,
    pub totals: OutcomeCounts,
    pub by_theorem: BTreeMap<Theorem, OutcomeCounts>,
}

impl SweepSummary {
    pub fn is_clean(&self) -> bool {
        self.parse_errors == 0 && self.totals.violation == 0
    }
}

pub enum SweepEvent<'a> {
    Report(&'a VerificationReport),
    Error(&'a ParseError),
}

/// Checks a stream of graphs on the current rayon pool. Chunks are
/// processed in parallel and emitted in input order, so the event sequence
/// and the summary do not depend on the number of workers.
pub fn sweep<I>(graphs: I, config: &SweepConfig, mut sink: impl FnMut(SweepEvent<'_>)) -> SweepSummary
where
    I: IntoIterator<Item = Result<Graph, ParseError>>,
{
    let mut summary = SweepSummary::default();
    let mut graphs = graphs.into_iter().peekable();
    let chunk_size = config.chunk_size.max(1);
    while graphs.peek().is_some() {
        let chunk: Vec<_> = graphs.by_ref().take(chunk_size).collect();
        let results: Vec<Result<Vec<VerificationReport>, ParseError>> = chunk
            .into_par_iter()
            .map(|item| item.map(|g| check_graph(&g, config)))
            .collect();
        for result in results {
            match result {
                Ok(reports) => {
                    summary.graphs += 1;
                    for report in &reports {
                        summary.totals.record(report.outcome);
                        summary.by_theorem.entry(report.theorem).or_default().record(report.outcome);
                        sink(SweepEvent::Report(report));
                    }
                }
                Err(error) => {
                    summary.parse_errors += 1;
                    sink(SweepEvent::Error(&error));
                }
            }
        }
    }
    summary
}
