//! Checks of the mean-size inequalities on concrete graphs.
//!
//! Inequalities that quantify over every `x < 0` are discharged by a sign
//! certificate on an exact integer polynomial; when no certificate applies
//! the claim is sampled on a grid of negative rationals.

mod certificate;
mod compare;
mod dvec;
mod lemma;
mod oracle;
mod remarks;
mod sweep;
mod xi;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::broken_cycle::OracleError;
use crate::chromatic::ChromaticError;
use crate::graph::GraphError;
use crate::orientation::OrientationError;

pub use certificate::{certify_positive_on_negatives, CertificateDetail, CertificateKind, SignCertificate};
pub use compare::{check_compare_k, check_compare_q, compare_k_polynomial, compare_q_polynomial};
pub use dvec::{check_pos_d, d_vector, predicted_zero_indices, DVector};
pub use lemma::{lemma51_pair, lemma51_partition, lemma51_witness, Lemma51Witness};
pub use oracle::{check_oracle, compare_oracle, ComparisonRow, Oracle, OracleComparison, ORACLE_MAX_ORDER};
pub use remarks::{acyclic_deletion_sum, harmonic_mean_exceeds, ratio_to_complete_decreasing};
pub use sweep::{check_graph, labeled_graphs, sweep, OutcomeCounts, SweepConfig, SweepEvent, SweepSummary};
pub use xi::{
    correction_graphs, vertex_recurrence, xi, xi_identity_isolated, xi_identity_recursive, IdentityCheck,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Chromatic(#[from] ChromaticError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error("evaluation point {0} is not negative")]
    NonNegativePoint(String),
    #[error("vertex {0} is isolated")]
    Isolated(usize),
    #[error("vertex {0} is not isolated")]
    NotIsolated(usize),
    #[error("graph is complete")]
    Complete,
    #[error("second graph is not a chordal proper spanning subgraph")]
    NotChordalProperSubgraph,
    #[error("hypotheses unmet: {0}")]
    Hypothesis(&'static str),
    #[error("d_{index} differs between the coefficient and polynomial routes")]
    DMismatch { index: usize },
    #[error("the zero polynomial has no sign certificate")]
    ZeroPolynomial,
    #[error("no sign certificate: {0}")]
    Inconclusive(String),
    #[error("oracles run on at most {max} vertices, got {n}")]
    OracleBudget { n: usize, max: usize },
}

/// The default sample set, with non-integers to avoid integer coincidences.
pub fn default_grid() -> Vec<BigRational> {
    [(-1, 4), (-1, 2), (-1, 1), (-2, 1), (-5, 1), (-10, 1)]
        .into_iter()
        .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `ε(T_n) < ε(G) < ε(K_n)` at `x = -1`.
    EpsilonBounds,
    /// `ε(G, x) < ε(K_n, x)` on `x < 0`, with the aggregate polynomial.
    CompareK,
    /// `ε(G, x) > ε(Q, x)` on `x < 0` for chordal proper spanning `Q`.
    CompareQ,
    /// Sign and zero pattern of the `d_i`.
    PositiveD,
    Whitney,
    Stanley,
    GreeneZaslavsky,
    PartitionInterpretation,
    OrientationInterpretation,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::EpsilonBounds => "epsilon-bounds",
            Theorem::CompareK => "compare-k",
            Theorem::CompareQ => "compare-q",
            Theorem::PositiveD => "positive-d",
            Theorem::Whitney => "whitney",
            Theorem::Stanley => "stanley",
            Theorem::GreeneZaslavsky => "greene-zaslavsky",
            Theorem::PartitionInterpretation => "partition-interpretation",
            Theorem::OrientationInterpretation => "orientation-interpretation",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    /// The graph sits on the boundary where the inequality is an equality,
    /// such as a complete graph or a tree.
    EqualityCase,
    /// No certificate and no counterexample.
    Inconclusive,
    Violation,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::EqualityCase => "equality-case",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Violation => "violation",
        })
    }
}

/// Data that replays a report. Numbers are exact decimal or `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A sample point and the value found there.
    Point { x: String, value: String },
    /// A coefficient index and the offending value.
    Index { i: usize, value: String },
    /// A named vector of exact values.
    Vector { name: String, values: Vec<String> },
    /// Three exact values `lower < middle < upper`.
    Bounds { lower: String, value: String, upper: String },
    /// A check that could not run.
    Message { text: String },
}

impl Witness {
    pub(crate) fn vector<T: ToString>(name: &str, values: &[T]) -> Self {
        Witness::Vector { name: name.to_owned(), values: values.iter().map(T::to_string).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph6: String,
    pub n: usize,
    pub theorem: Theorem,
    pub outcome: Outcome,
    pub certificate_kind: Option<CertificateKind>,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub(crate) fn new(g: &crate::Graph, theorem: Theorem, outcome: Outcome) -> Self {
        Self {
            graph6: crate::graph::io::to_graph6(g),
            n: g.order(),
            theorem,
            outcome,
            certificate_kind: None,
            witness: None,
        }
    }

    pub(crate) fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub(crate) fn with_certificate(mut self, kind: CertificateKind) -> Self {
        self.certificate_kind = Some(kind);
        self
    }
}

pub(crate) fn require_negative(x: &BigRational) -> Result<(), VerifyError> {
    use num_traits::Signed;
    if x.is_negative() {
        Ok(())
    } else {
        Err(VerifyError::NonNegativePoint(x.to_string()))
    }
}
