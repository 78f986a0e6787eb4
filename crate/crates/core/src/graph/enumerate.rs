use super::Graph;

/// Every labelled simple graph on `n` vertices, one per subset of the
/// `n(n-1)/2` possible edges. Bit `k` of the index selects the `k`-th pair
/// in lexicographic order `(0,1), (0,2), .., (n-2,n-1)`.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// Largest order whose pair count fits the 64-bit index.
    pub const MAX_ORDER: usize = 11;

    pub fn new(n: usize) -> Self {
        assert!(n <= Self::MAX_ORDER, "labelled enumeration supports n <= {}", Self::MAX_ORDER);
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let end = 1u64 << pairs.len();
        Self { n, pairs, next: 0, end }
    }

    /// Total number of graphs, `2^(n(n-1)/2)`.
    pub fn total(&self) -> u64 {
        self.end
    }

    /// The graph with the given enumeration index.
    pub fn graph_at(&self, index: u64) -> Graph {
        let mut g = Graph::empty(self.n);
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if index >> k & 1 == 1 {
                g.link(u, v);
            }
        }
        g
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        (self.next < self.end).then(|| {
            self.next += 1;
            self.graph_at(self.next - 1)
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(LabeledGraphs::new(0).count(), 1);
        assert_eq!(LabeledGraphs::new(1).count(), 1);
        assert_eq!(LabeledGraphs::new(3).count(), 8);
        assert_eq!(LabeledGraphs::new(4).total(), 64);
        // Connected labelled graphs on 4 vertices: 38 (OEIS A001187).
        assert_eq!(LabeledGraphs::new(4).filter(Graph::is_connected).count(), 38);
    }

    #[test]
    fn first_and_last() {
        let all = LabeledGraphs::new(4);
        assert_eq!(all.graph_at(0), Graph::empty(4));
        assert_eq!(all.graph_at(all.total() - 1), Graph::complete(4));
    }
}
