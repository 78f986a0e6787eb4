//! Connected vertex partitions, enumerated as restricted growth strings.

use super::{Graph, GraphError, VertexSet};

/// Unordered partition of `{0..n}` into nonempty blocks, stored with blocks
/// sorted by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    blocks: Vec<VertexSet>,
}

impl VertexPartition {
    /// Validates that `blocks` are nonempty, disjoint and cover `0..n`.
    pub fn new(n: usize, mut blocks: Vec<VertexSet>) -> Option<Self> {
        let mut seen = VertexSet::new();
        for block in &blocks {
            if block.is_empty() || block.intersects(&seen) {
                return None;
            }
            seen.union_with(block);
        }
        if seen != VertexSet::full(n) {
            return None;
        }
        blocks.sort_by_key(|b| b.first());
        Some(Self { blocks })
    }

    pub(crate) fn new_unchecked(blocks: Vec<VertexSet>) -> Self {
        Self { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: usize) -> Option<&VertexSet> {
        self.blocks.iter().find(|b| b.contains(v))
    }

    /// The unique ordering of the blocks that lies in `OP_{i,anchor}`.
    pub fn order_from(&self, anchor: usize) -> Option<OrderedPartition> {
        let first = self.blocks.iter().position(|b| b.contains(anchor))?;
        let mut rest: Vec<VertexSet> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != first)
            .map(|(_, b)| b.clone())
            .collect();
        // Later blocks each hold the minimum of everything still unplaced.
        rest.sort_by_key(|b| b.first());
        let mut blocks = Vec::with_capacity(self.blocks.len());
        blocks.push(self.blocks[first].clone());
        blocks.extend(rest);
        Some(OrderedPartition { blocks, anchor })
    }
}

/// An ordered partition `(V_1, .., V_i)` whose first block holds the
/// anchor and whose `j`-th block (`j >= 2`) holds the minimum of
/// `V_j ∪ .. ∪ V_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    blocks: Vec<VertexSet>,
    anchor: usize,
}

impl OrderedPartition {
    pub fn new(blocks: Vec<VertexSet>, anchor: usize) -> Option<Self> {
        let candidate = Self { blocks, anchor };
        candidate.is_well_ordered().then_some(candidate)
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Minimum of block `j` (zero-based), the `m_j` of the orientation
    /// interpretation for `j >= 1`.
    pub fn block_min(&self, j: usize) -> usize {
        self.blocks[j].first().expect("blocks are nonempty")
    }

    fn is_well_ordered(&self) -> bool {
        let Some(first) = self.blocks.first() else {
            return false;
        };
        if !first.contains(self.anchor) || self.blocks.iter().any(VertexSet::is_empty) {
            return false;
        }
        let mut tail = VertexSet::new();
        for block in self.blocks[1..].iter().rev() {
            if block.intersects(&tail) {
                return false;
            }
            tail.union_with(block);
            if tail.first() != block.first() {
                return false;
            }
        }
        first.is_disjoint(&tail)
    }

    pub fn unordered(&self) -> VertexPartition {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|b| b.first());
        VertexPartition { blocks }
    }
}

/// Stream of the members of `P_i(V)`: partitions into `i` blocks, each
/// inducing a connected subgraph.
pub struct ConnectedPartitions<'g> {
    graph: &'g Graph,
    blocks: usize,
    growth: Vec<usize>,
    prefix_max: Vec<usize>,
    exhausted: bool,
}

impl<'g> ConnectedPartitions<'g> {
    fn new(graph: &'g Graph, blocks: usize) -> Self {
        let n = graph.order();
        Self { graph, blocks, growth: vec![0; n], prefix_max: vec![0; n], exhausted: false }
    }

    /// Advances to the next restricted growth string using at most
    /// `self.blocks` distinct values.
    fn advance(&mut self) -> bool {
        let n = self.growth.len();
        for k in (1..n).rev() {
            let limit = (self.prefix_max[k - 1] + 1).min(self.blocks - 1);
            if self.growth[k] < limit {
                self.growth[k] += 1;
                self.prefix_max[k] = self.prefix_max[k - 1].max(self.growth[k]);
                for j in k + 1..n {
                    self.growth[j] = 0;
                    self.prefix_max[j] = self.prefix_max[k];
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> Option<VertexPartition> {
        if self.prefix_max.last().copied().unwrap_or(0) + 1 != self.blocks {
            return None;
        }
        let mut blocks = vec![VertexSet::new(); self.blocks];
        for (v, &b) in self.growth.iter().enumerate() {
            blocks[b].insert(v);
        }
        blocks
            .iter()
            .all(|b| self.graph.is_connected_within(b))
            .then(|| VertexPartition::new_unchecked(blocks))
    }
}

impl Iterator for ConnectedPartitions<'_> {
    type Item = VertexPartition;

    fn next(&mut self) -> Option<VertexPartition> {
        while !self.exhausted {
            let found = self.current();
            self.exhausted = !self.advance();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Stream of `OP_{i,v}(V)`: each connected partition in its unique
/// admissible order.
pub struct OrderedPartitions<'g> {
    inner: ConnectedPartitions<'g>,
    anchor: usize,
}

impl Iterator for OrderedPartitions<'_> {
    type Item = OrderedPartition;

    fn next(&mut self) -> Option<OrderedPartition> {
        self.inner.next().and_then(|p| p.order_from(self.anchor))
    }
}

impl Graph {
    pub fn connected_partitions(&self, blocks: usize) -> Result<ConnectedPartitions<'_>, GraphError> {
        if blocks == 0 || blocks > self.order() {
            return Err(GraphError::BlockCount { i: blocks, n: self.order() });
        }
        Ok(ConnectedPartitions::new(self, blocks))
    }

    pub fn ordered_partitions(
        &self,
        blocks: usize,
        anchor: usize,
    ) -> Result<OrderedPartitions<'_>, GraphError> {
        if anchor >= self.order() {
            return Err(GraphError::NoSuchVertex { vertex: anchor, n: self.order() });
        }
        Ok(OrderedPartitions { inner: self.connected_partitions(blocks)?, anchor })
    }
}
