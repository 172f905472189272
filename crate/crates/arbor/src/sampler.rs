//! Seeded random subtree generation under the uniform and weighted
//! measures.
//!
//! Size selection is exact: cumulative big-integer weights against a
//! uniform big-integer draw, no floating point in the marginal law. For
//! complete graphs the k-edge subtree itself comes from a uniform vertex
//! subset plus a uniform Prufer sequence; for arbitrary graphs from a
//! uniform rank into the canonical enumeration.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

use crate::closed_form;
use crate::enumerate::{self, SubtreeEdgeSet};
use crate::error::{ArborError, Result};
use crate::graph::{edge, Graph};
use crate::num::Natural;

/// Algorithm identifier recorded in draw-log metadata.
pub const RNG_ID: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Uniform,
    Weighted,
}

impl Measure {
    pub fn name(&self) -> &'static str {
        match self {
            Measure::Uniform => "uniform",
            Measure::Weighted => "weighted",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SampleSpec {
    pub measure: Measure,
    pub seed: u64,
    pub count: u64,
}

/// Decode a Prufer sequence over an explicit label set into the unique
/// labeled tree on those labels.
pub fn prufer_decode(seq: &[u32], labels: &[u32]) -> Result<SubtreeEdgeSet> {
    let s = labels.len();
    if s < 2 {
        return Err(ArborError::domain("prufer_decode requires >= 2 labels"));
    }
    if seq.len() != s - 2 {
        return Err(ArborError::domain(format!(
            "prufer sequence length {} does not match {} labels",
            seq.len(),
            s
        )));
    }
    let index_of = |label: u32| -> Result<usize> {
        labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| ArborError::domain(format!("label {} not in label set", label)))
    };
    let mut degree = vec![1u32; s];
    let mut seq_idx = Vec::with_capacity(seq.len());
    for &x in seq {
        let i = index_of(x)?;
        degree[i] += 1;
        seq_idx.push(i);
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..s)
        .filter(|&i| degree[i] == 1)
        .collect();
    let mut edges = Vec::with_capacity(s - 1);
    for &x in &seq_idx {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push(edge(labels[leaf], labels[x]));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut it = leaves.iter();
    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
    edges.push(edge(labels[a], labels[b]));
    Ok(SubtreeEdgeSet::new(edges))
}

/// Cumulative thresholds for exact discrete sampling.
struct SizeDistribution {
    cumulative: Vec<BigUint>,
    total: BigUint,
}

impl SizeDistribution {
    /// weights[i] is the weight of size i+1.
    fn new(weights: Vec<BigUint>) -> Result<SizeDistribution> {
        let mut cumulative = Vec::with_capacity(weights.len());
        let mut acc = BigUint::zero();
        for w in weights {
            acc += w;
            cumulative.push(acc.clone());
        }
        if acc.is_zero() {
            return Err(ArborError::domain("sampling distribution has zero mass"));
        }
        Ok(SizeDistribution {
            cumulative,
            total: acc,
        })
    }

    /// Draw a size k >= 1.
    fn draw(&self, rng: &mut ChaCha8Rng) -> usize {
        let x = rng.gen_biguint_below(&self.total);
        let idx = self.cumulative.partition_point(|c| *c <= x);
        idx + 1
    }
}

fn size_weights(counts: &[Natural], measure: Measure) -> Vec<BigUint> {
    counts
        .iter()
        .enumerate()
        .map(|(i, c)| match measure {
            Measure::Uniform => c.clone(),
            Measure::Weighted => c * BigUint::from(i as u64 + 1),
        })
        .collect()
}

/// Seeded draws from the subtrees of K_n under the requested measure.
pub fn sample_complete(n: u64, spec: &SampleSpec) -> Result<Vec<SubtreeEdgeSet>> {
    if n < 2 {
        return Err(ArborError::domain("sample_complete requires n >= 2"));
    }
    let counts = closed_form::complete_counts(n)?;
    let dist = SizeDistribution::new(size_weights(&counts.counts, spec.measure))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count as usize);
    for _ in 0..spec.count {
        let k = dist.draw(&mut rng);
        // uniform (k+1)-subset of the vertices
        let mut labels: Vec<u32> = rand::seq::index::sample(&mut rng, n as usize, k + 1)
            .into_iter()
            .map(|i| i as u32)
            .collect();
        labels.sort_unstable();
        // uniform Prufer sequence over those labels
        let seq: Vec<u32> = (0..k.saturating_sub(1))
            .map(|_| labels[rng.gen_range(0..labels.len())])
            .collect();
        out.push(prufer_decode(&seq, &labels)?);
    }
    Ok(out)
}

/// Seeded draws from the subtrees of an arbitrary graph, via its exact
/// census and the canonical enumeration order.
pub fn sample_generic(g: &Graph, spec: &SampleSpec, budget: u64) -> Result<Vec<SubtreeEdgeSet>> {
    let poly = enumerate::subtree_polynomial(g, None, budget)?;
    let counts = poly.positive_counts().to_vec();
    let dist = SizeDistribution::new(size_weights(&counts, spec.measure))?;
    let mut by_size: Vec<Option<Vec<SubtreeEdgeSet>>> = vec![None; counts.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count as usize);
    for _ in 0..spec.count {
        let k = dist.draw(&mut rng);
        let rank = rng
            .gen_biguint_below(&counts[k - 1])
            .to_usize()
            .expect("census size fits the work budget");
        let pool = &mut by_size[k - 1];
        if pool.is_none() {
            *pool = Some(enumerate::enumerate_subtrees(g, k, budget)?);
        }
        out.push(pool.as_ref().unwrap()[rank].clone());
    }
    Ok(out)
}

/// Draw log: a JSON header line with the spec and RNG identifier, then one
/// line per draw, "k<TAB>sorted edge list".
pub fn draw_log(target: &str, n: u64, spec: &SampleSpec, draws: &[SubtreeEdgeSet]) -> String {
    let header = serde_json::json!({
        "target": target,
        "n": n,
        "measure": spec.measure.name(),
        "seed": spec.seed,
        "count": spec.count,
        "rng": RNG_ID,
    });
    let mut out = header.to_string();
    out.push('\n');
    for d in draws {
        let _ = writeln!(out, "{}\t{}", d.size(), d.edge_list_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};

    #[test]
    fn prufer_base_cases() {
        let t = prufer_decode(&[], &[0, 1]).unwrap();
        assert_eq!(t.edges(), &[(0, 1)]);
        let t = prufer_decode(&[2], &[0, 1, 2]).unwrap();
        assert_eq!(t.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn prufer_errors() {
        assert!(prufer_decode(&[], &[0]).is_err());
        assert!(prufer_decode(&[5], &[0, 1, 2]).is_err());
        assert!(prufer_decode(&[0, 1], &[0, 1, 2]).is_err());
    }

    #[test]
    fn prufer_is_a_bijection_on_five_labels() {
        let labels = [0u32, 1, 2, 3, 4];
        let mut seen = std::collections::HashSet::new();
        for a in 0..5u32 {
            for b in 0..5u32 {
                for c in 0..5u32 {
                    let t = prufer_decode(&[a, b, c], &labels).unwrap();
                    assert!(t.is_valid_subtree());
                    assert_eq!(t.size(), 4);
                    seen.insert(t);
                }
            }
        }
        assert_eq!(seen.len(), 125);
    }

    #[test]
    fn sample_complete_k2_is_the_edge() {
        let spec = SampleSpec {
            measure: Measure::Uniform,
            seed: 7,
            count: 20,
        };
        for d in sample_complete(2, &spec).unwrap() {
            assert_eq!(d.edges(), &[(0, 1)]);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = SampleSpec {
            measure: Measure::Weighted,
            seed: 99,
            count: 50,
        };
        assert_eq!(
            sample_complete(6, &spec).unwrap(),
            sample_complete(6, &spec).unwrap()
        );
        let g = build_family(Family::Theta, &[4, 4]).unwrap();
        assert_eq!(
            sample_generic(&g, &spec, enumerate::DEFAULT_WORK_BUDGET).unwrap(),
            sample_generic(&g, &spec, enumerate::DEFAULT_WORK_BUDGET).unwrap()
        );
    }

    #[test]
    fn draws_are_valid_subtrees_of_the_host() {
        let g = build_family(Family::Theta, &[4, 4]).unwrap();
        let spec = SampleSpec {
            measure: Measure::Uniform,
            seed: 3,
            count: 200,
        };
        for d in sample_generic(&g, &spec, enumerate::DEFAULT_WORK_BUDGET).unwrap() {
            assert!(d.is_valid_subtree());
            for &(u, v) in d.edges() {
                assert!(g.has_edge(u, v));
            }
        }
        let spec = SampleSpec {
            measure: Measure::Weighted,
            seed: 3,
            count: 200,
        };
        for d in sample_complete(7, &spec).unwrap() {
            assert!(d.is_valid_subtree());
        }
    }

    #[test]
    fn generic_path_distribution() {
        // path with 2 edges: subtrees are each edge and the whole path
        let g = Graph::parse("3 2\n0 1\n1 2\n").unwrap();
        let spec = SampleSpec {
            measure: Measure::Uniform,
            seed: 11,
            count: 30_000,
        };
        let draws = sample_generic(&g, &spec, enumerate::DEFAULT_WORK_BUDGET).unwrap();
        let mut hist = std::collections::HashMap::new();
        for d in &draws {
            *hist.entry(d.clone()).or_insert(0u64) += 1;
        }
        assert_eq!(hist.len(), 3);
        for (_, c) in hist {
            // each of the three subtrees has probability 1/3
            let dev = (c as f64 / 30_000.0 - 1.0 / 3.0).abs();
            assert!(dev < 0.02, "deviation {}", dev);
        }
    }

    #[test]
    fn draw_log_format() {
        let spec = SampleSpec {
            measure: Measure::Uniform,
            seed: 1,
            count: 2,
        };
        let draws = sample_complete(3, &spec).unwrap();
        let log = draw_log("complete", 3, &spec, &draws);
        let mut lines = log.lines();
        let header: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(header["rng"], "chacha8");
        assert_eq!(header["seed"], 1);
        let first = lines.next().unwrap();
        assert!(first.contains('\t'));
    }
}
