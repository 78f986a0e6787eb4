//! Simple labelled graphs and the structural operations the rest of the
//! crate consumes.
//!
//! Vertices are the indices `0..n`. The one-based labels `1..=n` used by
//! the text formats and by [`Graph::build`] map to index `label - 1`, so
//! the numeric order of vertices is the same in both conventions.
//! Deletion and contraction relabel the surviving vertices
//! order-preservingly; the `*_with_map` variants return the explicit
//! old→new [`VertexMap`].

mod chordal;
mod enumerate;
pub mod io;
mod partition;
mod set;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use enumerate::LabeledGraphs;
pub use partition::{ConnectedPartitions, OrderedPartition, OrderedPartitions, VertexPartition};
pub use set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex label {label} outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} not in graph of order {n}")]
    NoSuchVertex { vertex: usize, n: usize },
    #[error("edge {0}-{1} not in graph")]
    NoSuchEdge(usize, usize),
    #[error("graphs have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("block count {i} outside 1..={n}")]
    BlockCount { i: usize, n: usize },
}

/// Old→new vertex correspondence produced by deletion, contraction and
/// induced subgraphs. Removed vertices map to `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    image: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn get(&self, old: usize) -> Option<usize> {
        self.image.get(old).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Image of a vertex set; removed vertices are dropped.
    pub fn map_set(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.get(v)).collect()
    }

    fn keeping(n: usize, kept: &VertexSet) -> Self {
        let mut next = 0;
        let image = (0..n)
            .map(|v| {
                kept.contains(v).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Self { image }
    }
}

/// A simple undirected graph on vertices `0..n` with bitset adjacency.
///
/// Immutable once built: every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![VertexSet::new(); n] }
    }

    /// Builds a graph from one-based label pairs. Duplicate edges collapse.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let check = |label: usize| {
            if label == 0 || label > n {
                Err(GraphError::LabelOutOfRange { label, n })
            } else {
                Ok(label - 1)
            }
        };
        let zero_based = edges
            .iter()
            .map(|&(u, v)| Ok((check(u)?, check(v)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        Self::from_edges(n, &zero_based)
    }

    /// Builds a graph from zero-based index pairs. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::NoSuchVertex { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Self { adj }
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Self::path(n);
        g.link(0, n - 1);
        g
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    /// The star `K_{1,leaves}` with centre `0`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.link(0, v);
        }
        g
    }

    /// Complete bipartite graph with parts `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let mut g = Self::empty(p + q);
        for u in 0..p {
            for v in p..p + q {
                g.link(u, v);
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut g = Self::empty(shift + other.order());
        for (u, v) in self.edges().into_iter() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + shift, v + shift);
        }
        g
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex { vertex: v, n: self.order() })
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(GraphError::NoSuchEdge(u, v))
        }
    }

    /// Copy of `self` with extra edges.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// `G[S]` with the members of `S` relabelled in ascending order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, VertexMap) {
        let map = VertexMap::keeping(self.order(), keep);
        let adj = keep
            .iter()
            .filter(|&v| v < self.order())
            .map(|v| map.map_set(&self.adj[v].intersection(keep)))
            .collect();
        (Graph { adj }, map)
    }

    pub fn delete_vertex(&self, u: usize) -> Result<Graph, GraphError> {
        self.delete_vertex_with_map(u).map(|(g, _)| g)
    }

    pub fn delete_vertex_with_map(&self, u: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(u)?;
        let mut keep = self.vertices();
        keep.remove(u);
        Ok(self.induced_subgraph(&keep))
    }

    pub fn delete_vertices(&self, remove: &VertexSet) -> (Graph, VertexMap) {
        self.induced_subgraph(&self.vertices().difference(remove))
    }

    /// `G - e`; the order is unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Simple contraction `G / e`: the endpoints merge into the smaller
    /// one, parallel edges collapse, and the order drops by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.contract_edge_with_map(u, v).map(|(g, _)| g)
    }

    pub fn contract_edge_with_map(
        &self,
        u: usize,
        v: usize,
    ) -> Result<(Graph, VertexMap), GraphError> {
        self.check_edge(u, v)?;
        let (keep, gone) = (u.min(v), u.max(v));
        let mut merged = self.clone();
        for w in self.adj[gone].iter().filter(|&w| w != keep) {
            merged.link(keep, w);
        }
        let (graph, mut map) = merged.delete_vertex_with_map(gone)?;
        map.image[gone] = map.get(keep);
        Ok((graph, map))
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v].intersection(within).iter() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// True if `G[set]` is connected. The empty set counts as disconnected.
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(start) => self.reach_within(start, set).len() == set.len(),
        }
    }

    pub fn components(&self) -> VertexPartition {
        let mut remaining = self.vertices();
        let mut blocks = Vec::new();
        while let Some(start) = remaining.first() {
            let block = self.reach_within(start, &remaining);
            remaining = remaining.difference(&block);
            blocks.push(block);
        }
        VertexPartition::new_unchecked(blocks)
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Order-0 graphs are not connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|row| row.len() + 1 == n)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| set.difference(&self.adj[v]).len() == 1)
    }

    /// True iff `{u} ∪ N(u)` is a clique.
    pub fn is_simplicial(&self, u: usize) -> bool {
        self.is_clique(&self.adj[u])
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.order()
    }

    /// True iff the graph is the cycle `C_n` (up to labelling), `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.is_connected() && self.adj.iter().all(|row| row.len() == 2)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}
