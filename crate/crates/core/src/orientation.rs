//! Acyclic orientations and the coefficient interpretations built on them.
//!
//! Orientations are grown one vertex at a time in index order. When vertex
//! `k` arrives, each edge to an earlier neighbour is pointed in or out; the
//! choice closes a directed cycle exactly when some out-neighbour already
//! reaches some in-neighbour. Reachability among placed vertices is kept as
//! bitmasks, so every surviving branch ends in a distinct acyclic
//! orientation and dead branches die at the vertex that kills them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::broken_cycle::{EdgeOrdering, OracleError, WhitneyOracle};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("source and sink are the same vertex {0}")]
    SourceIsSink(usize),
    #[error("arcs do not orient the edges of the graph")]
    EdgeMismatch,
}

/// One direction per edge, stored as `(tail, head)` arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    order: usize,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(g: &Graph, mut arcs: Vec<(usize, usize)>) -> Result<Self, OrientationError> {
        arcs.sort_unstable();
        let mut underlying: Vec<_> = arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        underlying.sort_unstable();
        if underlying != g.edges() {
            return Err(OrientationError::EdgeMismatch);
        }
        Ok(Self { order: g.order(), arcs })
    }

    /// Bit `k` of `mask` reverses the `k`-th edge of `g.edges()`, which is
    /// otherwise directed from its smaller endpoint.
    pub fn from_mask(g: &Graph, mask: u64) -> Self {
        let mut arcs: Vec<_> = g
            .edges()
            .into_iter()
            .enumerate()
            .map(|(k, (u, v))| if mask >> k & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        arcs.sort_unstable();
        Self { order: g.order(), arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, head)| head == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(tail, _)| tail == v).count()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.in_degree(v) == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// Kahn's algorithm.
    pub fn is_acyclic(&self) -> bool {
        let mut indegree = vec![0usize; self.order];
        for &(_, head) in &self.arcs {
            indegree[head] += 1;
        }
        let mut ready: Vec<_> = (0..self.order).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &(tail, head) in &self.arcs {
                if tail == v {
                    indegree[head] -= 1;
                    if indegree[head] == 0 {
                        ready.push(head);
                    }
                }
            }
        }
        removed == self.order
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Constraints {
    unique_source: Option<usize>,
    sink: Option<usize>,
}

struct Enumerator<'a, F> {
    earlier: Vec<u64>,
    last_neighbor: Vec<Option<usize>>,
    constraints: Constraints,
    reach: Vec<u64>,
    indegree: Vec<usize>,
    outdegree: Vec<usize>,
    arcs: Vec<(usize, usize)>,
    visit: &'a mut F,
}

impl<F: FnMut(&[(usize, usize)])> Enumerator<'_, F> {
    fn place(&mut self, k: usize) {
        let n = self.earlier.len();
        if k == n {
            (self.visit)(&self.arcs);
            return;
        }
        let back = self.earlier[k];
        let count = back.count_ones();
        let neighbors: Vec<usize> = (0..k).filter(|&w| back >> w & 1 == 1).collect();
        // Bit j of `choice` sends the edge to neighbours[j] out of k.
        for choice in 0..1u64 << count {
            let mut out = 0u64;
            let mut into = 0u64;
            for (j, &w) in neighbors.iter().enumerate() {
                if choice >> j & 1 == 1 {
                    out |= 1 << w;
                } else {
                    into |= 1 << w;
                }
            }
            if let Some(s) = self.constraints.unique_source {
                if (s == k && into != 0) || out >> s & 1 == 1 {
                    continue;
                }
            }
            if let Some(t) = self.constraints.sink {
                if (t == k && out != 0) || into >> t & 1 == 1 {
                    continue;
                }
            }
            let downstream = out
                .iter_bits()
                .fold(0u64, |acc, w| acc | self.reach[w]);
            if downstream & into != 0 {
                continue;
            }
            let saved_reach = self.reach.clone();
            let saved_arcs = self.arcs.len();
            let new_reach = downstream | 1 << k;
            for x in 0..k {
                if self.reach[x] & into != 0 {
                    self.reach[x] |= new_reach;
                }
            }
            self.reach[k] = new_reach;
            for &w in &neighbors {
                if out >> w & 1 == 1 {
                    self.arcs.push((k, w));
                    self.outdegree[k] += 1;
                    self.indegree[w] += 1;
                } else {
                    self.arcs.push((w, k));
                    self.outdegree[w] += 1;
                    self.indegree[k] += 1;
                }
            }
            if self.sources_ok(k) {
                self.place(k + 1);
            }
            for &(tail, head) in &self.arcs[saved_arcs..] {
                self.outdegree[tail] -= 1;
                self.indegree[head] -= 1;
            }
            self.arcs.truncate(saved_arcs);
            self.reach = saved_reach;
        }
    }

    /// A vertex whose last neighbour is placed has its final in-degree.
    /// Under a unique-source constraint, any other such vertex with no
    /// incoming arc ends the branch.
    fn sources_ok(&self, k: usize) -> bool {
        let Some(source) = self.constraints.unique_source else {
            return true;
        };
        (0..=k).all(|w| {
            let settled = self.last_neighbor[w].map_or(true, |last| last <= k);
            w == source || !settled || self.indegree[w] > 0
        })
    }
}

trait Bits {
    fn iter_bits(self) -> impl Iterator<Item = usize>;
}

impl Bits for u64 {
    fn iter_bits(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&b| self >> b & 1 == 1)
    }
}

fn enumerate<F: FnMut(&[(usize, usize)])>(g: &Graph, constraints: Constraints, visit: &mut F) {
    let n = g.order();
    assert!(n <= 64, "orientation enumeration supports at most 64 vertices");
    let earlier = (0..n)
        .map(|k| g.neighbors(k).iter().filter(|&w| w < k).fold(0u64, |acc, w| acc | 1 << w))
        .collect();
    let last_neighbor = (0..n).map(|v| g.neighbors(v).iter().last()).collect();
    let mut engine = Enumerator {
        earlier,
        last_neighbor,
        constraints,
        reach: vec![0; n],
        indegree: vec![0; n],
        outdegree: vec![0; n],
        arcs: Vec::new(),
        visit,
    };
    engine.place(0);
}

fn count(g: &Graph, constraints: Constraints) -> BigInt {
    let mut total = 0u64;
    enumerate(g, constraints, &mut |_| total += 1);
    BigInt::from(total)
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), GraphError> {
    if v >= g.order() {
        return Err(GraphError::NoSuchVertex { vertex: v, n: g.order() });
    }
    Ok(())
}

/// Calls `visit` once per acyclic orientation.
pub fn for_each_acyclic(g: &Graph, mut visit: impl FnMut(Orientation)) {
    let n = g.order();
    enumerate(g, Constraints::default(), &mut |arcs| {
        let mut arcs = arcs.to_vec();
        arcs.sort_unstable();
        visit(Orientation { order: n, arcs });
    });
}

/// `α(G)`, the number of acyclic orientations.
pub fn count_acyclic(g: &Graph) -> BigInt {
    count(g, Constraints::default())
}

/// `α(G, v)`: acyclic orientations whose only source is `v`.
pub fn count_unique_source(g: &Graph, v: usize) -> Result<BigInt, OrientationError> {
    check_vertex(g, v)?;
    Ok(count(g, Constraints { unique_source: Some(v), sink: None }))
}

/// Acyclic orientations with `v` the unique source and `s` of out-degree 0.
/// `s` may share sink status with other vertices.
pub fn count_unique_source_with_sink(g: &Graph, v: usize, s: usize) -> Result<BigInt, OrientationError> {
    check_vertex(g, v)?;
    check_vertex(g, s)?;
    if v == s {
        return Err(OrientationError::SourceIsSink(v));
    }
    Ok(count(g, Constraints { unique_source: Some(v), sink: Some(s) }))
}

/// `Σ_{P ∈ P_i(V)} Π_j τ̃(G[V_j])` under the lexicographic edge ranking.
pub fn interp_coefficient_partition(g: &Graph, i: usize) -> Result<BigInt, OrientationError> {
    interp_coefficient_partition_with(g, &EdgeOrdering::identity(g), i)
}

/// As [`interp_coefficient_partition`] with an explicit edge ranking.
pub fn interp_coefficient_partition_with(
    g: &Graph,
    eta: &EdgeOrdering,
    i: usize,
) -> Result<BigInt, OrientationError> {
    let partitions = g.connected_partitions(i)?;
    let oracle = WhitneyOracle::new(g, eta.clone())?;
    let mut memo: HashMap<VertexSet, BigInt> = HashMap::new();
    let mut total = BigInt::zero();
    for partition in partitions {
        let mut product = BigInt::one();
        for block in partition.blocks() {
            let trees = memo
                .entry(block.clone())
                .or_insert_with(|| oracle.spanning_trees_within(block));
            product *= &*trees;
            if product.is_zero() {
                break;
            }
        }
        total += product;
    }
    Ok(total)
}

/// `Σ_{OP_{i,v}} α(G[V_1], v) Π_{j≥2} α(G[V_j], m_j)` with `m_j` the
/// least vertex of block `j`.
pub fn interp_coefficient_orientation(g: &Graph, i: usize, v: usize) -> Result<BigInt, OrientationError> {
    let partitions = g.ordered_partitions(i, v)?;
    let mut memo: HashMap<(VertexSet, usize), BigInt> = HashMap::new();
    let mut rooted = |block: &VertexSet, root: usize| -> BigInt {
        memo.entry((block.clone(), root))
            .or_insert_with(|| {
                let (induced, map) = g.induced_subgraph(block);
                let root = map.get(root).expect("root lies in its block");
                count(&induced, Constraints { unique_source: Some(root), sink: None })
            })
            .clone()
    };
    let mut total = BigInt::zero();
    for ordered in partitions {
        let mut product = BigInt::one();
        for (j, block) in ordered.blocks().iter().enumerate() {
            let root = if j == 0 { ordered.anchor() } else { ordered.block_min(j) };
            product *= rooted(block, root);
            if product.is_zero() {
                break;
            }
        }
        total += product;
    }
    Ok(total)
}
