use super::VerifyError;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma51Witness {
    /// Non-adjacent vertices whose joint removal leaves a connected graph.
    Pair(usize, usize),
    /// `V_1, .., V_i` with every `G[V_j]`, `j ≥ 2`, connected and `G[V_1]`
    /// a connected part plus one isolated vertex.
    Partition(Vec<VertexSet>),
}

/// Searches for non-adjacent `u_1 < u_2` with `G - {u_1, u_2}` connected.
/// Requires a connected, non-complete graph on at least three vertices
/// that is not a cycle.
pub fn lemma51_pair(g: &Graph) -> Result<(usize, usize), VerifyError> {
    let n = g.order();
    if n < 3 || g.is_complete() || !g.is_connected() || g.is_cycle() {
        return Err(VerifyError::Hypothesis("needs a connected non-complete non-cycle graph on n >= 3 vertices"));
    }
    let all = g.vertices();
    for u1 in 0..n {
        for u2 in u1 + 1..n {
            if g.has_edge(u1, u2) {
                continue;
            }
            let mut rest = all.clone();
            rest.remove(u1);
            rest.remove(u2);
            if g.is_connected_within(&rest) {
                return Ok((u1, u2));
            }
        }
    }
    Err(VerifyError::Hypothesis("no separating-free non-adjacent pair exists"))
}

/// A vertex of `set` whose removal keeps `G[set]` connected: the last
/// vertex reached by a breadth-first search.
fn non_cut_vertex(g: &Graph, set: &VertexSet) -> usize {
    let start = set.first().expect("nonempty set");
    let mut seen = VertexSet::singleton(start);
    let mut queue = std::collections::VecDeque::from([start]);
    let mut last = start;
    while let Some(v) = queue.pop_front() {
        last = v;
        for w in g.neighbors(v).intersection(set).iter() {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    last
}

/// Splits a connected set of two or more vertices into two connected parts.
fn split(g: &Graph, set: &VertexSet) -> (VertexSet, VertexSet) {
    let w = non_cut_vertex(g, set);
    let mut rest = set.clone();
    rest.remove(w);
    (rest, VertexSet::singleton(w))
}

/// Builds the partition for `2 ≤ c ≤ n - 1` and `c ≤ i ≤ n - 1`.
///
/// For `i = c` the seed moves a non-cut vertex `u` of a largest component
/// into another component's block; each further step splits a block of two
/// or more vertices into two connected parts, keeping `u` beside the
/// connected remainder of `V_1`.
pub fn lemma51_partition(g: &Graph, i: usize) -> Result<Vec<VertexSet>, VerifyError> {
    let n = g.order();
    let c = g.component_count();
    if n < 3 || g.is_complete() || c < 2 || c > n - 1 || i < c || i > n - 1 {
        return Err(VerifyError::Hypothesis("needs 2 <= c <= n-1 and c <= i <= n-1 on a non-complete graph"));
    }
    let components = g.components();
    let mut rest: Vec<VertexSet> = components.blocks().to_vec();
    let largest = (0..rest.len()).max_by_key(|&k| (rest[k].len(), std::cmp::Reverse(k))).expect("c >= 2");
    let big = rest.remove(largest);
    let second = rest.remove(0);
    let u = non_cut_vertex(g, &big);

    let mut core = big.clone();
    core.remove(u);
    // Invariant: V_1 = first ∪ {u}, u has no neighbour in `first`.
    let (mut first, mut blocks) = (second, vec![core]);
    blocks.extend(rest);
    for _ in c..i {
        if first.len() >= 2 {
            let (keep, moved) = split(g, &first);
            first = keep;
            blocks.push(moved);
        } else {
            let k = blocks.iter().position(|b| b.len() >= 2).expect("k <= n-2 leaves a block to split");
            let (keep, moved) = split(g, &blocks[k]);
            blocks[k] = keep;
            blocks.push(moved);
        }
    }
    let mut v1 = first;
    v1.insert(u);
    let mut partition = vec![v1];
    partition.extend(blocks);
    Ok(partition)
}

/// Part (i) for connected graphs, part (ii) otherwise.
pub fn lemma51_witness(g: &Graph, i: usize) -> Result<Lemma51Witness, VerifyError> {
    if g.component_count() == 1 {
        lemma51_pair(g).map(|(u1, u2)| Lemma51Witness::Pair(u1, u2))
    } else {
        lemma51_partition(g, i).map(Lemma51Witness::Partition)
    }
}
