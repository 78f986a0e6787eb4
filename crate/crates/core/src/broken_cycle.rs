//! Whitney's broken-cycle oracle.
//!
//! Given a bijective edge ranking, every cycle loses its lowest-ranked edge
//! and the remaining path is a broken cycle. Counting spanning subgraphs
//! with `n - i` edges and `i` components that contain no broken cycle
//! yields `a_i(G)` for every ranking. Everything here is direct
//! enumeration and shares no code with deletion–contraction.
//!
//! Edge subsets are `u64` masks in which bit `r` is the edge of rank
//! `r + 1`, so the minimum-rank edge of a subset is its lowest set bit.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub type EdgeMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("edge ranking is not a bijection onto 1..={0}")]
    NotBijective(usize),
    #[error("{0} edges exceed the 64-edge oracle budget")]
    TooManyEdges(usize),
    #[error("coefficient index {i} outside 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
}

/// A bijection `η: E → {1, .., |E|}`, stored as the edges in rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrdering {
    ranked: Vec<(usize, usize)>,
}

impl EdgeOrdering {
    /// Ranks edges lexicographically.
    pub fn identity(g: &Graph) -> Self {
        Self { ranked: g.edges() }
    }

    /// `ranks[k]` is the rank of the `k`-th edge of `g.edges()`.
    pub fn from_ranks(g: &Graph, ranks: &[usize]) -> Result<Self, OracleError> {
        let edges = g.edges();
        let m = edges.len();
        if ranks.len() != m {
            return Err(OracleError::NotBijective(m));
        }
        let mut ranked = vec![None; m];
        for (&edge, &rank) in edges.iter().zip(ranks) {
            let slot = rank.checked_sub(1).and_then(|r| ranked.get_mut(r));
            match slot {
                Some(slot @ None) => *slot = Some(edge),
                _ => return Err(OracleError::NotBijective(m)),
            }
        }
        Ok(Self { ranked: ranked.into_iter().map(Option::unwrap).collect() })
    }

    pub fn shuffled<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Self {
        let mut ranked = g.edges();
        ranked.shuffle(rng);
        Self { ranked }
    }

    /// Edges listed from rank 1 upwards.
    pub fn ranked_edges(&self) -> &[(usize, usize)] {
        &self.ranked
    }

    pub fn rank_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.ranked.iter().position(|&e| e == key).map(|r| r + 1)
    }

    fn mask_of(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> EdgeMask {
        edges
            .into_iter()
            .map(|(u, v)| 1 << (self.rank_of(u, v).expect("edge of the ranked graph") - 1))
            .fold(0, |acc, bit| acc | bit)
    }
}

/// Broken cycles as edge masks, one per cycle of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrokenCycleSet {
    masks: Vec<EdgeMask>,
}

impl BrokenCycleSet {
    pub fn masks(&self) -> &[EdgeMask] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// True if the edge set contains some broken cycle.
    pub fn hits(&self, subset: EdgeMask) -> bool {
        self.masks.iter().any(|&bc| bc & subset == bc)
    }
}

/// Every simple cycle as an edge mask. Cycles are rooted at their smallest
/// vertex and found in both directions; the mask set removes the mirror.
fn simple_cycles(g: &Graph, eta: &EdgeOrdering) -> Vec<EdgeMask> {
    fn extend(
        g: &Graph,
        eta: &EdgeOrdering,
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut VertexSet,
        found: &mut HashSet<EdgeMask>,
    ) {
        let tip = *path.last().expect("path starts at the root");
        for next in g.neighbors(tip).iter() {
            if next == root && path.len() >= 3 {
                let closing = std::iter::once((tip, root));
                let walk = path.windows(2).map(|w| (w[0], w[1]));
                found.insert(eta.mask_of(walk.chain(closing)));
            } else if next > root && !on_path.contains(next) {
                path.push(next);
                on_path.insert(next);
                extend(g, eta, root, path, on_path, found);
                on_path.remove(next);
                path.pop();
            }
        }
    }

    let mut found = HashSet::new();
    for root in 0..g.order() {
        let mut path = vec![root];
        let mut on_path = VertexSet::singleton(root);
        extend(g, eta, root, &mut path, &mut on_path, &mut found);
    }
    let mut cycles: Vec<_> = found.into_iter().collect();
    cycles.sort_unstable();
    cycles
}

fn check_budget(g: &Graph) -> Result<(), OracleError> {
    let m = g.edge_count();
    if m > EdgeMask::BITS as usize {
        return Err(OracleError::TooManyEdges(m));
    }
    Ok(())
}

fn check_ordering(g: &Graph, eta: &EdgeOrdering) -> Result<(), OracleError> {
    let mut ranked = eta.ranked.clone();
    ranked.sort_unstable();
    if ranked != g.edges() {
        return Err(OracleError::NotBijective(g.edge_count()));
    }
    Ok(())
}

pub fn broken_cycles(g: &Graph, eta: &EdgeOrdering) -> Result<BrokenCycleSet, OracleError> {
    check_budget(g)?;
    check_ordering(g, eta)?;
    let mut masks: Vec<_> = simple_cycles(g, eta)
        .into_iter()
        .map(|cycle| cycle & (cycle - 1))
        .collect();
    masks.sort_unstable();
    masks.dedup();
    Ok(BrokenCycleSet { masks })
}

/// Prepared oracle: the broken cycles of `G` under `η`, indexed by their
/// highest-ranked edge so that each is tested exactly once as subsets grow.
pub struct WhitneyOracle<'g> {
    graph: &'g Graph,
    eta: EdgeOrdering,
    broken: BrokenCycleSet,
    by_top_edge: Vec<Vec<EdgeMask>>,
}

impl<'g> WhitneyOracle<'g> {
    pub fn new(graph: &'g Graph, eta: EdgeOrdering) -> Result<Self, OracleError> {
        let broken = broken_cycles(graph, &eta)?;
        let mut by_top_edge = vec![Vec::new(); graph.edge_count()];
        for &bc in broken.masks() {
            let top = (EdgeMask::BITS - 1 - bc.leading_zeros()) as usize;
            by_top_edge[top].push(bc);
        }
        Ok(Self { graph, eta, broken, by_top_edge })
    }

    pub fn broken_cycles(&self) -> &BrokenCycleSet {
        &self.broken
    }

    pub fn ordering(&self) -> &EdgeOrdering {
        &self.eta
    }

    /// Counts broken-cycle-free forests by edge count, over the edges
    /// allowed by `usable`. `counts[k]` is the number with `k` edges.
    fn forests_by_size(&self, usable: EdgeMask) -> Vec<u64> {
        let n = self.graph.order();
        let mut counts = vec![0u64; n.max(1)];
        let labels: Vec<usize> = (0..n).collect();
        self.grow(usable, 0, 0, &labels, &mut counts);
        counts
    }

    fn grow(&self, usable: EdgeMask, start: usize, chosen: EdgeMask, labels: &[usize], counts: &mut [u64]) {
        counts[chosen.count_ones() as usize] += 1;
        let ranked = self.eta.ranked_edges();
        for k in start..ranked.len() {
            if usable >> k & 1 == 0 {
                continue;
            }
            let with = chosen | 1 << k;
            if self.by_top_edge[k].iter().any(|&bc| bc & with == bc) {
                continue;
            }
            let (u, v) = ranked[k];
            let (keep, merge) = (labels[u], labels[v]);
            if keep == merge {
                continue;
            }
            let relabelled: Vec<usize> =
                labels.iter().map(|&l| if l == merge { keep } else { l }).collect();
            self.grow(usable, k + 1, with, &relabelled, counts);
        }
    }

    /// `[a_1, .., a_n]` by Whitney's theorem.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let n = self.graph.order();
        let usable = if self.graph.edge_count() == 64 { u64::MAX } else { (1 << self.graph.edge_count()) - 1 };
        let by_size = self.forests_by_size(usable);
        // A forest with k edges on n vertices has n - k components.
        (1..=n).map(|i| BigInt::from(by_size.get(n - i).copied().unwrap_or(0))).collect()
    }

    pub fn coefficient(&self, i: usize) -> Result<BigInt, OracleError> {
        let n = self.graph.order();
        if i == 0 || i > n {
            return Err(OracleError::IndexOutOfRange { i, n });
        }
        Ok(self.coefficients()[i - 1].clone())
    }

    /// `τ̃(G[S])`: spanning trees of `G[S]` containing no broken cycle of
    /// the ambient graph `G`.
    pub fn spanning_trees_within(&self, set: &VertexSet) -> BigInt {
        let size = set.len();
        if size == 0 {
            return BigInt::from(0);
        }
        let usable = self
            .eta
            .ranked_edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| set.contains(u) && set.contains(v))
            .fold(0, |acc, (k, _)| acc | 1 << k);
        // Acyclic edge sets inside S with |S| - 1 edges span S.
        BigInt::from(self.forests_by_size(usable).get(size - 1).copied().unwrap_or(0))
    }
}

/// Number of spanning subgraphs with `n - i` edges and `i` components that
/// contain no broken cycle.
pub fn whitney_coefficient(g: &Graph, eta: &EdgeOrdering, i: usize) -> Result<BigInt, OracleError> {
    WhitneyOracle::new(g, eta.clone())?.coefficient(i)
}

pub fn whitney_coefficients(g: &Graph, eta: &EdgeOrdering) -> Result<Vec<BigInt>, OracleError> {
    Ok(WhitneyOracle::new(g, eta.clone())?.coefficients())
}

/// `τ̃(G[S])` with respect to `G`'s broken cycles.
pub fn bcf_spanning_trees(g: &Graph, eta: &EdgeOrdering, set: &VertexSet) -> Result<BigInt, OracleError> {
    Ok(WhitneyOracle::new(g, eta.clone())?.spanning_trees_within(set))
}
