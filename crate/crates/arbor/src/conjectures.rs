//! Mechanical checking of the subtree conjectures and identities on
//! exhaustive small-graph universes and parameterized families.
//!
//! Each check sits behind the [`ConjectureCheck`] trait and is registered
//! by name, so the CLI and the exhaustive sweep select checks at runtime.

use rayon::prelude::*;

use crate::enumerate;
use crate::error::{ArborError, Result};
use crate::graph::{Edge, Graph};
use crate::num::{dec_sig, Natural};
use crate::poly::SubtreePolynomial;
use crate::stats;

pub const DEFAULT_SEARCH_CAP: u64 = 7;

#[derive(Debug, Clone)]
pub struct ConjectureVerdict {
    pub conjecture: &'static str,
    pub instance: String,
    pub holds: bool,
    /// smallest maximizing index, for the unimodality check
    pub mode: Option<usize>,
    pub witness: Option<serde_json::Value>,
}

impl ConjectureVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "conjecture": self.conjecture,
            "instance": self.instance,
            "holds": self.holds,
        });
        if let Some(m) = self.mode {
            v["mode"] = serde_json::json!(m);
        }
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

/// Weak unimodality of the coefficients a_1.. of a subtree polynomial.
/// Reports the smallest maximizing index; a violation witness is the first
/// consecutive strict valley (k-1, k, k+1) in edge-count indexing.
pub fn check_unimodal_counts(counts: &[Natural]) -> ConjectureVerdict {
    let mode = counts
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
        .map(|(i, _)| i + 1);
    // weakly rising then weakly falling iff no strict ascent follows a
    // strict descent
    let mut descent: Option<usize> = None;
    let mut witness = None;
    for k in 0..counts.len().saturating_sub(1) {
        if descent.is_none() && counts[k + 1] < counts[k] {
            descent = Some(k);
        } else if let Some(d) = descent {
            if counts[k + 1] > counts[k] {
                witness = Some(serde_json::json!({
                    "indices": [d + 1, d + 2, k + 2],
                    "values": [
                        counts[d].to_string(),
                        counts[d + 1].to_string(),
                        counts[k + 1].to_string()
                    ],
                }));
                break;
            }
        }
    }
    let holds = witness.is_none();
    ConjectureVerdict {
        conjecture: "unimodal",
        instance: format!("counts[1..={}]", counts.len()),
        holds,
        mode,
        witness,
    }
}

pub fn check_unimodal(poly: &SubtreePolynomial) -> ConjectureVerdict {
    check_unimodal_counts(poly.positive_counts())
}

/// Which density the monotonicity conjecture is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityKind {
    Uniform,
    Weighted,
}

/// For every non-edge e of a connected graph, check mu(G) < mu(G+e)
/// exactly. Uses the uniform density by default.
pub fn check_monotonicity(
    g: &Graph,
    kind: DensityKind,
    budget: u64,
) -> Result<Vec<ConjectureVerdict>> {
    if !g.is_connected() {
        return Err(ArborError::domain(
            "density monotonicity is only conjectured for connected graphs",
        ));
    }
    let pick = |s: &stats::StatsReport| match kind {
        DensityKind::Uniform => s.mu_p.clone(),
        DensityKind::Weighted => s.mu_q.clone(),
    };
    let base = stats::global_stats_from_polynomial(&enumerate::subtree_polynomial(
        g, None, budget,
    )?)?;
    let mu_before = pick(&base);
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut g2 = g.clone();
            g2.add_edge(u, v)?;
            let after = stats::global_stats_from_polynomial(&enumerate::subtree_polynomial(
                &g2, None, budget,
            )?)?;
            let mu_after = pick(&after);
            let holds = mu_before < mu_after;
            out.push(ConjectureVerdict {
                conjecture: "monotonic",
                instance: format!("add {}-{}", u, v),
                holds,
                mode: None,
                witness: if holds {
                    None
                } else {
                    Some(serde_json::json!({
                        "edge": [u, v],
                        "mu_before": dec_sig(&mu_before, 12),
                        "mu_after": dec_sig(&mu_after, 12),
                        "graph": g.serialize(),
                    }))
                },
            });
        }
    }
    Ok(out)
}

/// Sentinel identity p(G) = q(G) mu_p(G); a false verdict means an
/// implementation bug, not a finding.
pub fn check_pq_identity(g: &Graph, budget: u64) -> Result<ConjectureVerdict> {
    if !g.is_connected() {
        return Err(ArborError::domain("pq identity check requires a connected graph"));
    }
    let s = stats::global_stats_from_polynomial(&enumerate::subtree_polynomial(g, None, budget)?)?;
    let holds = s.p == &s.q * &s.mu_p;
    Ok(ConjectureVerdict {
        conjecture: "pq_identity",
        instance: format!("n={} m={}", g.vertex_count(), g.edge_count()),
        holds,
        mode: None,
        witness: if holds {
            None
        } else {
            Some(serde_json::json!({ "graph": g.serialize() }))
        },
    })
}

/// A conjecture check selectable by name.
pub trait ConjectureCheck: Sync {
    fn id(&self) -> &'static str;
    fn run(&self, g: &Graph, budget: u64) -> Result<Vec<ConjectureVerdict>>;
}

struct UnimodalCheck;
struct MonotonicityCheck;
struct PqIdentityCheck;

impl ConjectureCheck for UnimodalCheck {
    fn id(&self) -> &'static str {
        "unimodal"
    }
    fn run(&self, g: &Graph, budget: u64) -> Result<Vec<ConjectureVerdict>> {
        let poly = enumerate::subtree_polynomial(g, None, budget)?;
        let mut v = check_unimodal(&poly);
        v.instance = format!("n={} m={}", g.vertex_count(), g.edge_count());
        if !v.holds {
            let w = v.witness.get_or_insert(serde_json::json!({}));
            w["graph"] = serde_json::json!(g.serialize());
        }
        Ok(vec![v])
    }
}

impl ConjectureCheck for MonotonicityCheck {
    fn id(&self) -> &'static str {
        "monotonic"
    }
    fn run(&self, g: &Graph, budget: u64) -> Result<Vec<ConjectureVerdict>> {
        check_monotonicity(g, DensityKind::Uniform, budget)
    }
}

impl ConjectureCheck for PqIdentityCheck {
    fn id(&self) -> &'static str {
        "pq_identity"
    }
    fn run(&self, g: &Graph, budget: u64) -> Result<Vec<ConjectureVerdict>> {
        Ok(vec![check_pq_identity(g, budget)?])
    }
}

pub fn registry() -> Vec<Box<dyn ConjectureCheck>> {
    vec![
        Box::new(UnimodalCheck),
        Box::new(MonotonicityCheck),
        Box::new(PqIdentityCheck),
    ]
}

pub fn lookup_check(id: &str) -> Result<Box<dyn ConjectureCheck>> {
    registry()
        .into_iter()
        .find(|c| c.id() == id)
        .ok_or_else(|| {
            ArborError::domain(format!(
                "unknown conjecture check '{}'; known: unimodal, monotonic, pq_identity",
                id
            ))
        })
}

#[derive(Debug, Clone)]
pub struct SearchSummary {
    pub graphs_checked: u64,
    pub verdicts_total: u64,
    pub violations: Vec<ConjectureVerdict>,
}

/// Exhaustively run the selected checks over all connected labeled graphs
/// with up to max_n vertices. With `dedup_iso`, only the lexicographically
/// minimal labeling of each isomorphism class is checked; this changes the
/// work, never the violation set.
pub fn search_small_graphs(
    max_n: u64,
    check_ids: &[&str],
    dedup_iso: bool,
    budget: u64,
    cap: u64,
) -> Result<SearchSummary> {
    if max_n > cap {
        return Err(ArborError::domain(format!(
            "max_n {} exceeds the configured cap {}",
            max_n, cap
        )));
    }
    let checks: Vec<Box<dyn ConjectureCheck>> = check_ids
        .iter()
        .map(|id| lookup_check(id))
        .collect::<Result<_>>()?;

    let mut graphs_checked = 0u64;
    let mut verdicts_total = 0u64;
    let mut violations = Vec::new();
    for n in 2..=max_n {
        let n = n as u32;
        let slots: Vec<Edge> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let masks: Vec<u64> = (0u64..(1 << slots.len())).collect();
        let results: Vec<Result<Option<(u64, Vec<ConjectureVerdict>)>>> = masks
            .par_iter()
            .map(|&mask| {
                let g = graph_from_mask(n, &slots, mask);
                if !g.is_connected() {
                    return Ok(None);
                }
                if dedup_iso && !is_canonical_labeling(n, &slots, mask) {
                    return Ok(None);
                }
                let mut verdicts = Vec::new();
                for c in &checks {
                    verdicts.extend(c.run(&g, budget)?);
                }
                Ok(Some((1, verdicts)))
            })
            .collect();
        for r in results {
            if let Some((count, verdicts)) = r? {
                graphs_checked += count;
                verdicts_total += verdicts.len() as u64;
                violations.extend(verdicts.into_iter().filter(|v| !v.holds));
            }
        }
    }
    Ok(SearchSummary {
        graphs_checked,
        verdicts_total,
        violations,
    })
}

fn graph_from_mask(n: u32, slots: &[Edge], mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for (i, &(u, v)) in slots.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// True when `mask` is the minimum over all vertex relabelings.
fn is_canonical_labeling(n: u32, slots: &[Edge], mask: u64) -> bool {
    let slot_index: std::collections::HashMap<Edge, usize> = slots
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let mut perm: Vec<u32> = (0..n).collect();
    loop {
        let mut permuted = 0u64;
        for (i, &(u, v)) in slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let e = crate::graph::edge(perm[u as usize], perm[v as usize]);
                permuted |= 1 << slot_index[&e];
            }
        }
        if permuted < mask {
            return false;
        }
        if !next_permutation(&mut perm) {
            return true;
        }
    }
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[derive(Debug, Clone)]
pub struct ThetaModeRow {
    pub n: u64,
    pub mode: usize,
    /// mode / (sqrt(2) n), display only
    pub ratio: f64,
}

#[derive(Debug, Clone)]
pub struct ThetaModeTrend {
    pub rows: Vec<ThetaModeRow>,
    /// first n whose census exceeded the budget, if any
    pub truncated_at: Option<u64>,
}

/// Mode of the subtree-polynomial coefficients of theta_{n,n}, with a
/// trend column against sqrt(2) n.
pub fn theta_mode_trend(n_values: &[u64], budget: u64) -> Result<ThetaModeTrend> {
    let mut rows = Vec::new();
    for &n in n_values {
        let g = crate::graph::build_family(crate::graph::Family::Theta, &[n, n])?;
        let poly = match enumerate::subtree_polynomial(&g, None, budget) {
            Ok(p) => p,
            Err(ArborError::Budget { .. }) => {
                return Ok(ThetaModeTrend {
                    rows,
                    truncated_at: Some(n),
                });
            }
            Err(e) => return Err(e),
        };
        let v = check_unimodal(&poly);
        let mode = v.mode.expect("theta graph has subtrees");
        rows.push(ThetaModeRow {
            n,
            mode,
            ratio: mode as f64 / (std::f64::consts::SQRT_2 * n as f64),
        });
    }
    Ok(ThetaModeTrend {
        rows,
        truncated_at: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_WORK_BUDGET;
    use crate::graph::{build_family, Family};
    use crate::num::nat;

    #[test]
    fn unimodal_k4() {
        let v = check_unimodal_counts(&[nat(6), nat(12), nat(16)]);
        assert!(v.holds);
        assert_eq!(v.mode, Some(3));
    }

    #[test]
    fn unimodal_plateau() {
        let v = check_unimodal_counts(&[nat(4), nat(4), nat(4)]);
        assert!(v.holds);
        assert_eq!(v.mode, Some(1));
    }

    #[test]
    fn non_unimodal_witness() {
        let v = check_unimodal_counts(&[nat(1), nat(3), nat(2), nat(4)]);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w["indices"], serde_json::json!([2, 3, 4]));
    }

    #[test]
    fn unimodal_reverse_symmetry() {
        // strictly unimodal input: reversing mirrors the mode
        let counts = [nat(1), nat(5), nat(9), nat(4), nat(2)];
        let fwd = check_unimodal_counts(&counts);
        let mut rev = counts.to_vec();
        rev.reverse();
        let bwd = check_unimodal_counts(&rev);
        assert!(fwd.holds && bwd.holds);
        assert_eq!(
            bwd.mode.unwrap(),
            counts.len() + 1 - fwd.mode.unwrap()
        );
    }

    #[test]
    fn monotonicity_triangle_closure() {
        // P3 -> C3: mu_p rises from 2/3 to 3/4
        let p3 = Graph::parse("3 2\n0 1\n1 2\n").unwrap();
        let verdicts = check_monotonicity(&p3, DensityKind::Uniform, DEFAULT_WORK_BUDGET).unwrap();
        assert_eq!(verdicts.len(), 1);
        assert!(verdicts[0].holds);
    }

    #[test]
    fn monotonicity_k4_minus_edge_and_star() {
        let k4 = build_family(Family::Complete, &[4]).unwrap();
        let mut k4m = Graph::new(4);
        for (u, v) in k4.edges() {
            if (u, v) != (2, 3) {
                k4m.add_edge(u, v).unwrap();
            }
        }
        let verdicts =
            check_monotonicity(&k4m, DensityKind::Uniform, DEFAULT_WORK_BUDGET).unwrap();
        assert!(verdicts.iter().all(|v| v.holds));

        let star = Graph::parse("4 3\n0 1\n0 2\n0 3\n").unwrap();
        let verdicts =
            check_monotonicity(&star, DensityKind::Uniform, DEFAULT_WORK_BUDGET).unwrap();
        assert_eq!(verdicts.len(), 3);
        assert!(verdicts.iter().all(|v| v.holds));
    }

    #[test]
    fn monotonicity_rejects_disconnected() {
        let g = Graph::parse("4 2\n0 1\n2 3\n").unwrap();
        assert!(check_monotonicity(&g, DensityKind::Uniform, DEFAULT_WORK_BUDGET).is_err());
    }

    #[test]
    fn pq_identity_examples() {
        for g in [
            build_family(Family::Complete, &[4]).unwrap(),
            Graph::parse("2 1\n0 1\n").unwrap(),
            build_family(Family::Theta, &[4, 4]).unwrap(),
        ] {
            assert!(check_pq_identity(&g, DEFAULT_WORK_BUDGET).unwrap().holds);
        }
    }

    #[test]
    fn registry_lookup() {
        assert!(lookup_check("unimodal").is_ok());
        assert!(lookup_check("monotonic").is_ok());
        assert!(lookup_check("pq_identity").is_ok());
        assert!(lookup_check("nope").is_err());
    }

    #[test]
    fn sweep_n4_unimodal() {
        let s = search_small_graphs(4, &["unimodal"], false, DEFAULT_WORK_BUDGET, 7).unwrap();
        assert!(s.violations.is_empty());
        // connected labeled graphs: 1 on 2 vertices, 4 on 3, 38 on 4
        assert_eq!(s.graphs_checked, 43);
    }

    #[test]
    fn sweep_cap() {
        assert!(search_small_graphs(8, &["unimodal"], false, DEFAULT_WORK_BUDGET, 7).is_err());
    }

    #[test]
    fn sweep_dedup_matches_full() {
        for ids in [["unimodal"], ["monotonic"], ["pq_identity"]] {
            let full = search_small_graphs(5, &ids, false, DEFAULT_WORK_BUDGET, 7).unwrap();
            let dedup = search_small_graphs(5, &ids, true, DEFAULT_WORK_BUDGET, 7).unwrap();
            assert!(full.violations.is_empty());
            assert!(dedup.violations.is_empty());
            assert!(dedup.graphs_checked < full.graphs_checked);
        }
    }

    #[test]
    fn theta_mode_small() {
        let t = theta_mode_trend(&[4], DEFAULT_WORK_BUDGET).unwrap();
        assert!(t.truncated_at.is_none());
        let mode = t.rows[0].mode;
        assert!((1..=7).contains(&mode));
    }

    #[test]
    fn theta_mode_budget_truncation() {
        let t = theta_mode_trend(&[4, 10], 50).unwrap();
        assert_eq!(t.truncated_at, Some(4));
    }
}
