use super::{Graph, GraphError, VertexSet};

impl Graph {
    /// An ordering `u_1, .., u_n` in which every `u_i` is simplicial in
    /// `G[{u_1, .., u_i}]`, or `None` if the graph is not chordal.
    ///
    /// Maximum cardinality search visits the vertices; the visit order is
    /// then checked directly, so a returned ordering is always valid.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut weight = vec![0usize; n];
        let mut visited = VertexSet::new();
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))?;
            visited.insert(next);
            order.push(next);
            for w in self.neighbors(next).iter() {
                if !visited.contains(w) {
                    weight[w] += 1;
                }
            }
        }

        let mut earlier = VertexSet::new();
        for &u in &order {
            if !self.is_clique(&self.neighbors(u).intersection(&earlier)) {
                return None;
            }
            earlier.insert(u);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// True iff `self` is chordal and its edge set is a proper subset of
    /// `host`'s, on the same vertex set.
    pub fn is_chordal_proper_spanning_subgraph(&self, host: &Graph) -> Result<bool, GraphError> {
        if self.order() != host.order() {
            return Err(GraphError::OrderMismatch(self.order(), host.order()));
        }
        let subset = (0..self.order()).all(|v| self.neighbors(v).is_subset(host.neighbors(v)));
        let proper = self.edge_count() < host.edge_count();
        Ok(subset && proper && self.is_chordal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabeledGraphs;

    fn is_peo(g: &Graph, order: &[usize]) -> bool {
        (0..order.len()).all(|i| {
            let earlier: VertexSet = order[..i].iter().copied().collect();
            g.is_clique(&g.neighbors(order[i]).intersection(&earlier))
        })
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Brute force: an induced cycle of length >= 4 exists iff some vertex
    /// subset of size >= 4 induces a connected 2-regular graph.
    fn has_long_induced_cycle(g: &Graph) -> bool {
        let n = g.order();
        (0u64..1 << n).any(|mask| {
            let set = VertexSet::from_bits(mask);
            set.len() >= 4 && g.induced_subgraph(&set).0.is_cycle()
        })
    }

    #[test]
    fn trees_are_chordal() {
        assert!(Graph::path(6).is_chordal());
        assert!(Graph::star(4).is_chordal());
        assert!(Graph::empty(3).is_chordal());
        assert!(Graph::empty(0).is_chordal());
    }

    #[test]
    fn c4_is_not_chordal() {
        assert_eq!(Graph::cycle(4).perfect_elimination_ordering(), None);
    }

    #[test]
    fn k4_minus_edge_matches_exhaustive_orderings() {
        let g = Graph::complete(4).delete_edge(0, 1).unwrap();
        let order = g.perfect_elimination_ordering().expect("chordal");
        assert!(is_peo(&g, &order));
        assert!(permutations(4).iter().any(|p| is_peo(&g, p)));
    }

    #[test]
    fn mcs_agrees_with_induced_cycle_search() {
        for n in 0..=6 {
            for g in LabeledGraphs::new(n) {
                let peo = g.perfect_elimination_ordering();
                assert_eq!(peo.is_some(), !has_long_induced_cycle(&g), "{g:?}");
                if let Some(order) = peo {
                    assert!(is_peo(&g, &order));
                }
            }
        }
    }

    #[test]
    fn proper_spanning_examples() {
        let c4 = Graph::cycle(4);
        let tree = c4.delete_edge(0, 3).unwrap();
        assert_eq!(tree.is_chordal_proper_spanning_subgraph(&c4), Ok(true));
        assert_eq!(c4.is_chordal_proper_spanning_subgraph(&c4), Ok(false));
        assert_eq!(c4.is_chordal_proper_spanning_subgraph(&Graph::complete(4)), Ok(false));
        assert_eq!(
            Graph::path(3).is_chordal_proper_spanning_subgraph(&c4),
            Err(GraphError::OrderMismatch(3, 4))
        );
        let k4_minus = Graph::complete(4).delete_edge(1, 2).unwrap();
        assert_eq!(k4_minus.is_chordal_proper_spanning_subgraph(&Graph::complete(4)), Ok(true));
    }
}
