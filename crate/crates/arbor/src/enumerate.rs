//! Generic exact subtree census for arbitrary small graphs.
//!
//! Subtrees are enumerated by reverse search: a tree is grown from its
//! minimum-labeled vertex, one edge at a time, and an extension edge (u, w)
//! is accepted only when the new vertex w becomes the maximum non-root leaf
//! of the extended tree. Removing that leaf is the unique parent rule, so
//! every subtree is generated exactly once with no global dedup set and
//! O(depth) memory.
//!
//! Every public entry point shares the same walker; counting and streaming
//! differ only in the visitor.

use crate::error::{ArborError, Result};
use crate::graph::{edge, Edge, Graph};
use crate::num::{nat, Natural};
use crate::poly::SubtreePolynomial;

/// Default cap on extension steps for one census.
pub const DEFAULT_WORK_BUDGET: u64 = 100_000_000;

/// A connected acyclic edge set inside some host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubtreeEdgeSet {
    edges: Vec<Edge>,
}

impl SubtreeEdgeSet {
    pub fn new(mut edges: Vec<Edge>) -> SubtreeEdgeSet {
        edges.sort_unstable();
        SubtreeEdgeSet { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// |vertices| == |edges| + 1 and connected.
    pub fn is_valid_subtree(&self) -> bool {
        if self.edges.is_empty() {
            return false;
        }
        let mut verts: Vec<u32> = self
            .edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != self.edges.len() + 1 {
            return false;
        }
        // connectivity over the edge set
        let mut seen = vec![false; verts.len()];
        let idx = |v: u32| verts.binary_search(&v).unwrap();
        let mut stack = vec![verts[0]];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[idx(w)] {
                    seen[idx(w)] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == verts.len()
    }

    /// "u-v u-v ..." over the sorted edge list.
    pub fn edge_list_string(&self) -> String {
        self.edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", u, v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

struct Walker<'a, F: FnMut(&[Edge])> {
    adj: Vec<Vec<u32>>,
    budget: u64,
    steps: u64,
    max_edges: usize,
    visit: &'a mut F,
}

struct GrowState {
    in_tree: Vec<bool>,
    degree: Vec<u32>,
    tree_verts: Vec<u32>,
    edges: Vec<Edge>,
}

impl<'a, F: FnMut(&[Edge])> Walker<'a, F> {
    fn grow(&mut self, root: u32, st: &mut GrowState) -> Result<()> {
        if !st.edges.is_empty() {
            debug_assert!(SubtreeEdgeSet::new(st.edges.clone()).is_valid_subtree());
            (self.visit)(&st.edges);
        }
        if st.edges.len() >= self.max_edges {
            return Ok(());
        }
        // two largest non-root leaves of the current tree
        let mut max1: Option<u32> = None;
        let mut max2: Option<u32> = None;
        for &v in &st.tree_verts {
            if v != root && st.degree[v as usize] == 1 {
                if max1.map_or(true, |m| v > m) {
                    max2 = max1;
                    max1 = Some(v);
                } else if max2.map_or(true, |m| v > m) {
                    max2 = Some(v);
                }
            }
        }
        for ui in 0..st.tree_verts.len() {
            let u = st.tree_verts[ui];
            let threshold = if Some(u) == max1 { max2 } else { max1 };
            for wi in 0..self.adj[u as usize].len() {
                let w = self.adj[u as usize][wi];
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(ArborError::Budget {
                        steps: self.steps,
                        budget: self.budget,
                    });
                }
                if w <= root || st.in_tree[w as usize] {
                    continue;
                }
                if let Some(t) = threshold {
                    if w < t {
                        continue;
                    }
                }
                st.in_tree[w as usize] = true;
                st.degree[u as usize] += 1;
                st.degree[w as usize] = 1;
                st.tree_verts.push(w);
                st.edges.push(edge(u, w));
                self.grow(root, st)?;
                st.edges.pop();
                st.tree_verts.pop();
                st.degree[w as usize] = 0;
                st.degree[u as usize] -= 1;
                st.in_tree[w as usize] = false;
            }
        }
        Ok(())
    }
}

/// Walk every subtree of g with at most max_edges edges, calling `visit`
/// once per subtree. Returns the number of extension steps spent.
fn walk_subtrees<F: FnMut(&[Edge])>(
    g: &Graph,
    max_edges: usize,
    budget: u64,
    visit: &mut F,
) -> Result<u64> {
    let n = g.vertex_count() as usize;
    let mut adj = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut walker = Walker {
        adj,
        budget,
        steps: 0,
        max_edges,
        visit,
    };
    let mut st = GrowState {
        in_tree: vec![false; n],
        degree: vec![0; n],
        tree_verts: Vec::with_capacity(n),
        edges: Vec::with_capacity(max_edges),
    };
    for root in 0..g.vertex_count() {
        st.in_tree[root as usize] = true;
        st.tree_verts.push(root);
        walker.grow(root, &mut st)?;
        st.tree_verts.pop();
        st.in_tree[root as usize] = false;
    }
    Ok(walker.steps)
}

/// Exact number of k-edge subtrees for k = 1..(max_edges or n-1).
pub fn subtree_polynomial(
    g: &Graph,
    max_edges: Option<usize>,
    budget: u64,
) -> Result<SubtreePolynomial> {
    let n = g.vertex_count();
    let limit = max_edges
        .unwrap_or(usize::MAX)
        .min(n.saturating_sub(1) as usize);
    let mut counts = vec![0u64; limit];
    walk_subtrees(g, limit, budget, &mut |edges| {
        counts[edges.len() - 1] += 1;
    })?;
    let counts: Vec<Natural> = counts.into_iter().map(nat).collect();
    Ok(SubtreePolynomial::from_counts(&counts, n.max(1)))
}

/// Counts of subtrees whose edge set contains the fixed edge e.
pub fn local_subtree_polynomial(g: &Graph, e: Edge, budget: u64) -> Result<SubtreePolynomial> {
    let e = edge(e.0, e.1);
    if !g.has_edge(e.0, e.1) {
        return Err(ArborError::domain(format!(
            "edge ({}, {}) is not in the graph",
            e.0, e.1
        )));
    }
    let n = g.vertex_count();
    let limit = n.saturating_sub(1) as usize;
    let mut counts = vec![0u64; limit];
    walk_subtrees(g, limit, budget, &mut |edges| {
        if edges.contains(&e) {
            counts[edges.len() - 1] += 1;
        }
    })?;
    let counts: Vec<Natural> = counts.into_iter().map(nat).collect();
    Ok(SubtreePolynomial::from_counts(&counts, n))
}

/// All k-edge subtrees, in lexicographic order by sorted edge list.
pub fn enumerate_subtrees(g: &Graph, k: usize, budget: u64) -> Result<Vec<SubtreeEdgeSet>> {
    let n = g.vertex_count() as usize;
    if k == 0 || k > n.saturating_sub(1) {
        return Err(ArborError::domain(format!(
            "subtree size {} out of range 1..={} for a {}-vertex graph",
            k,
            n.saturating_sub(1),
            n
        )));
    }
    let mut out = Vec::new();
    walk_subtrees(g, k, budget, &mut |edges| {
        if edges.len() == k {
            out.push(SubtreeEdgeSet::new(edges.to_vec()));
        }
    })?;
    out.sort_unstable();
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}
