//! Labeled simple undirected graphs and the parameterized families the
//! statistics are computed over.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{ArborError, Result};

/// Unordered vertex pair, stored with the smaller label first.
pub type Edge = (u32, u32);

pub fn edge(u: u32, v: u32) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A labeled simple undirected graph on vertices 0..vertex_count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: u32,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(vertex_count: u32) -> Graph {
        Graph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        if u == v {
            return Err(ArborError::domain(format!("self-loop at vertex {}", u)));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(ArborError::domain(format!(
                "edge ({}, {}) has an endpoint >= vertex count {}",
                u, v, self.vertex_count
            )));
        }
        if !self.edges.insert(edge(u, v)) {
            return Err(ArborError::domain(format!("duplicate edge ({}, {})", u, v)));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count as usize;
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Edge-list text: first line "n m", then m lines "u v".
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| ArborError::Parse {
                line: 1,
                msg: "empty input".into(),
            })?;
        let mut parts = header.split_whitespace();
        let n: u32 = parse_field(parts.next(), 1, "vertex count")?;
        let m: usize = parse_field(parts.next(), 1, "edge count")?;
        if parts.next().is_some() {
            return Err(ArborError::Parse {
                line: 1,
                msg: "expected exactly two fields \"n m\"".into(),
            });
        }
        let mut g = Graph::new(n);
        let mut read = 0usize;
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let mut parts = line.split_whitespace();
            let u: u32 = parse_field(parts.next(), lineno, "endpoint")?;
            let v: u32 = parse_field(parts.next(), lineno, "endpoint")?;
            if parts.next().is_some() {
                return Err(ArborError::Parse {
                    line: lineno,
                    msg: "expected exactly two endpoints".into(),
                });
            }
            if u == v {
                return Err(ArborError::Parse {
                    line: lineno,
                    msg: format!("self-loop at vertex {}", u),
                });
            }
            if u >= n || v >= n {
                return Err(ArborError::Parse {
                    line: lineno,
                    msg: format!("endpoint >= vertex count {}", n),
                });
            }
            if !g.edges.insert(edge(u, v)) {
                return Err(ArborError::Parse {
                    line: lineno,
                    msg: format!("duplicate edge ({}, {})", u, v),
                });
            }
            read += 1;
        }
        if read != m {
            return Err(ArborError::Parse {
                line: 1,
                msg: format!("header promised {} edges, found {}", m, read),
            });
        }
        Ok(g)
    }
}

fn parse_field<T: std::str::FromStr>(s: Option<&str>, line: usize, what: &str) -> Result<T> {
    s.ok_or_else(|| ArborError::Parse {
        line,
        msg: format!("missing {}", what),
    })?
    .parse()
    .map_err(|_| ArborError::Parse {
        line,
        msg: format!("malformed {}", what),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    CompleteBipartite,
    Cycle,
    Theta,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "bipartite",
            Family::Cycle => "cycle",
            Family::Theta => "theta",
        }
    }
}

/// Build a member of one of the named graph families.
///
/// theta(a, b) is two hub vertices joined by three internally disjoint
/// paths with a-1, b-1 and 1 edges; theta(4, 4) has 6 vertices and 7 edges.
pub fn build_family(family: Family, params: &[u64]) -> Result<Graph> {
    match family {
        Family::Complete => {
            let [n] = expect_params::<1>(family, params)?;
            if n < 1 {
                return Err(ArborError::domain("complete family requires n >= 1"));
            }
            let n = n as u32;
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Family::CompleteBipartite => {
            let [m, n] = expect_params::<2>(family, params)?;
            if m < 1 || n < 1 {
                return Err(ArborError::domain("bipartite family requires m, n >= 1"));
            }
            let (m, n) = (m as u32, n as u32);
            let mut g = Graph::new(m + n);
            for u in 0..m {
                for v in 0..n {
                    g.add_edge(u, m + v)?;
                }
            }
            Ok(g)
        }
        Family::Cycle => {
            let [n] = expect_params::<1>(family, params)?;
            if n < 3 {
                return Err(ArborError::domain("cycle family requires n >= 3"));
            }
            let n = n as u32;
            let mut g = Graph::new(n);
            for v in 0..n {
                g.add_edge(v, (v + 1) % n)?;
            }
            Ok(g)
        }
        Family::Theta => {
            let [a, b] = expect_params::<2>(family, params)?;
            if a < 2 || b < 2 {
                return Err(ArborError::domain("theta family requires a, b >= 2"));
            }
            let (a, b) = (a as u32, b as u32);
            // hubs 0 and 1; internal vertices 2..a, then a..a+b-2
            let n = a + b - 2;
            let mut g = Graph::new(n);
            g.add_edge(0, 1)?;
            add_path(&mut g, 0, 1, 2, a - 1)?;
            add_path(&mut g, 0, 1, a, b - 1)?;
            Ok(g)
        }
    }
}

/// Path of `len` edges from hub `from` to hub `to` through fresh internal
/// vertices starting at `first_internal`.
fn add_path(g: &mut Graph, from: u32, to: u32, first_internal: u32, len: u32) -> Result<()> {
    debug_assert!(len >= 2);
    let mut prev = from;
    for i in 0..(len - 1) {
        let v = first_internal + i;
        g.add_edge(prev, v)?;
        prev = v;
    }
    g.add_edge(prev, to)
}

fn expect_params<const K: usize>(family: Family, params: &[u64]) -> Result<[u64; K]> {
    params.try_into().map_err(|_| {
        ArborError::domain(format!(
            "family {} expects {} parameter(s), got {}",
            family.name(),
            K,
            params.len()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let k4 = build_family(Family::Complete, &[4]).unwrap();
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);

        let theta44 = build_family(Family::Theta, &[4, 4]).unwrap();
        assert_eq!(theta44.vertex_count(), 6);
        assert_eq!(theta44.edge_count(), 7);
        assert_eq!(theta44.degree(0), 3);
        assert_eq!(theta44.degree(1), 3);

        let c4 = build_family(Family::Cycle, &[4]).unwrap();
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);

        let k23 = build_family(Family::CompleteBipartite, &[2, 3]).unwrap();
        assert_eq!(k23.vertex_count(), 5);
        assert_eq!(k23.edge_count(), 6);
    }

    #[test]
    fn family_param_errors() {
        assert!(build_family(Family::Cycle, &[2]).is_err());
        assert!(build_family(Family::Theta, &[1, 4]).is_err());
        assert!(build_family(Family::Complete, &[]).is_err());
    }

    #[test]
    fn parse_k2_and_k4() {
        let g = Graph::parse("2 1\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);

        let g = Graph::parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(g, build_family(Family::Complete, &[4]).unwrap());
    }

    #[test]
    fn parse_self_loop_reports_line() {
        let err = Graph::parse("3 3\n0 0\n1 2\n0 1\n").unwrap_err();
        match err {
            ArborError::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("unexpected error {:?}", other),
        }
    }

    #[test]
    fn parse_rejects_duplicates_and_range() {
        assert!(Graph::parse("3 2\n0 1\n1 0\n").is_err());
        assert!(Graph::parse("3 1\n0 3\n").is_err());
        assert!(Graph::parse("3 2\n0 1\n").is_err());
    }

    #[test]
    fn serialize_round_trip() {
        let g = build_family(Family::Theta, &[4, 4]).unwrap();
        let text = g.serialize();
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }

    #[test]
    fn connectivity() {
        assert!(build_family(Family::Cycle, &[5]).unwrap().is_connected());
        let mut g = Graph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert!(!g.is_connected());
    }
}
