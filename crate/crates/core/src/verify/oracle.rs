use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use super::{Outcome, Theorem, VerificationReport, VerifyError, Witness};
use crate::broken_cycle::{whitney_coefficients, EdgeOrdering};
use crate::chromatic::{chromatic_polynomial, Coefficients};
use crate::graph::Graph;
use crate::orientation::{
    count_acyclic, count_unique_source, interp_coefficient_orientation, interp_coefficient_partition_with,
};

/// Oracles enumerate, so they are limited to small graphs.
pub const ORACLE_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Oracle {
    /// Broken-cycle-free subgraphs against every `a_i`.
    Whitney,
    /// Acyclic orientations against `(-1)^n P(G, -1)`.
    Stanley,
    /// Unique-source orientations against `a_1`, for every source.
    GreeneZaslavsky,
    /// Connected partitions weighted by broken-cycle-free trees.
    Partition,
    /// Ordered partitions weighted by unique-source orientations.
    Orientation,
}

impl Oracle {
    pub const ALL: [Oracle; 5] =
        [Oracle::Whitney, Oracle::Stanley, Oracle::GreeneZaslavsky, Oracle::Partition, Oracle::Orientation];

    pub fn name(self) -> &'static str {
        match self {
            Oracle::Whitney => "whitney",
            Oracle::Stanley => "stanley",
            Oracle::GreeneZaslavsky => "gz",
            Oracle::Partition => "partition",
            Oracle::Orientation => "orientation",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|o| o.name() == name)
    }

    pub fn theorem(self) -> Theorem {
        match self {
            Oracle::Whitney => Theorem::Whitney,
            Oracle::Stanley => Theorem::Stanley,
            Oracle::GreeneZaslavsky => Theorem::GreeneZaslavsky,
            Oracle::Partition => Theorem::PartitionInterpretation,
            Oracle::Orientation => Theorem::OrientationInterpretation,
        }
    }
}

/// One quantity as computed by the polynomial engine and by an oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub quantity: String,
    pub engine: BigInt,
    pub oracle: BigInt,
}

impl ComparisonRow {
    fn new(quantity: String, engine: BigInt, oracle: BigInt) -> Self {
        Self { quantity, engine, oracle }
    }

    pub fn matches(&self) -> bool {
        self.engine == self.oracle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub oracle: Oracle,
    pub rows: Vec<ComparisonRow>,
}

impl OracleComparison {
    pub fn matches(&self) -> bool {
        self.rows.iter().all(ComparisonRow::matches)
    }
}

/// Side-by-side values from the engine and one oracle. `seed` drives the
/// random edge ranking used by the broken-cycle oracles. Quantity labels use
/// one-based vertex labels.
pub fn compare_oracle(g: &Graph, oracle: Oracle, seed: u64) -> Result<OracleComparison, VerifyError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(VerifyError::OracleBudget { n, max: ORACLE_MAX_ORDER });
    }
    let a = Coefficients::of_graph(g);
    let eta = EdgeOrdering::shuffled(g, &mut StdRng::seed_from_u64(seed));
    let alpha = || {
        let engine = chromatic_polynomial(g).eval(&num_rational::BigRational::from_integer((-1).into()));
        ComparisonRow::new("alpha".into(), engine.to_integer().abs(), count_acyclic(g))
    };
    let sources = || -> Result<Vec<ComparisonRow>, VerifyError> {
        (0..n)
            .map(|v| Ok(ComparisonRow::new(format!("alpha(G,{})", v + 1), a.get(1), count_unique_source(g, v)?)))
            .collect()
    };
    let mut rows = Vec::new();
    match oracle {
        Oracle::Whitney => {
            for (i, value) in whitney_coefficients(g, &eta)?.into_iter().enumerate() {
                rows.push(ComparisonRow::new(format!("a_{}", i + 1), a.get(i + 1), value));
            }
        }
        Oracle::Stanley => rows.push(alpha()),
        Oracle::GreeneZaslavsky => rows = sources()?,
        Oracle::Partition => {
            for i in 1..=n {
                rows.push(ComparisonRow::new(format!("a_{i}"), a.get(i), interp_coefficient_partition_with(g, &eta, i)?));
            }
        }
        Oracle::Orientation => {
            rows.push(alpha());
            rows.extend(sources()?);
            for v in 0..n {
                for i in 1..=n {
                    let value = interp_coefficient_orientation(g, i, v)?;
                    rows.push(ComparisonRow::new(format!("a_{i}[v={}]", v + 1), a.get(i), value));
                }
            }
        }
    }
    Ok(OracleComparison { oracle, rows })
}

/// FNV-1a over the graph6 string, so each graph gets its own stable ranking.
fn seed_for(graph6: &str) -> u64 {
    graph6.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// [`compare_oracle`] as a report; the first disagreement is the witness.
pub fn check_oracle(g: &Graph, oracle: Oracle) -> Result<VerificationReport, VerifyError> {
    let base = VerificationReport::new(g, oracle.theorem(), Outcome::Holds);
    let comparison = compare_oracle(g, oracle, seed_for(&base.graph6))?;
    Ok(match comparison.rows.iter().find(|row| !row.matches()) {
        None => base,
        Some(row) => VerificationReport { outcome: Outcome::Violation, ..base }.with_witness(Witness::vector(
            "quantity-engine-oracle",
            &[row.quantity.clone(), row.engine.to_string(), row.oracle.to_string()],
        )),
    })
}
