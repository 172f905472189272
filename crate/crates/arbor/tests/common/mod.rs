//! Shared helpers for the integration suites: a naive all-edge-subsets
//! subtree census and an exhaustive connected-labeled-graph generator.

use arbor::enumerate::SubtreeEdgeSet;
use arbor::graph::Edge;
use arbor::num::Natural;
use arbor::Graph;
use num_traits::{One, Zero};

/// Subtree counts by brute force over every subset of the edge set.
/// Index i holds the number of subtrees with i+1 edges. Only sensible for
/// small edge counts (exponential in m).
pub fn naive_counts(g: &Graph) -> Vec<Natural> {
    let edges: Vec<Edge> = g.edges().collect();
    let m = edges.len();
    assert!(m <= 20, "naive oracle limited to 20 edges");
    let n = g.vertex_count() as usize;
    let mut counts = vec![Natural::zero(); n.saturating_sub(1)];
    for mask in 1u32..(1 << m) {
        let subset: Vec<Edge> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| edges[i])
            .collect();
        let k = subset.len();
        if SubtreeEdgeSet::new(subset).is_valid_subtree() {
            counts[k - 1] += Natural::one();
        }
    }
    counts
}

/// Every connected labeled graph on exactly `n` vertices, generated by
/// iterating all edge masks over the n*(n-1)/2 vertex pairs.
pub fn connected_graphs(n: u32) -> Vec<Graph> {
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g.add_edge(u, v).unwrap();
            }
        }
        if g.edge_count() >= (n as usize).saturating_sub(1) && g.is_connected() {
            out.push(g);
        }
    }
    out
}
