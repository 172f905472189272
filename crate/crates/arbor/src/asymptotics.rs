//! Limit constants, bound verifiers and convergence tables for the
//! complete-graph statistics.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt::Write as _;

use crate::closed_form;
use crate::error::{ArborError, Result};
use crate::interval::{e_enclosure, exp_enclosure, RatInterval};
use crate::num::{dec_sig, nat_to_ratio, ratio_json, ExactRatio};
use crate::stats::{self, StatsReport};

const E_TERMS: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstName {
    /// e^(-1/e), the limit of both spanning probabilities.
    SpanningLimit,
    /// e^(-1-1/e), the limiting probability of an (n-2)-edge subtree.
    NearSpanningLimit,
    /// e^(-2/e), the limit for complete bipartite graphs K_{n,n}.
    BipartiteLimit,
    /// e^(1/e), the growth constant the lower bounds use.
    EulerInvExp,
}

impl ConstName {
    pub fn id(&self) -> &'static str {
        match self {
            ConstName::SpanningLimit => "spanning_limit",
            ConstName::NearSpanningLimit => "near_spanning_limit",
            ConstName::BipartiteLimit => "bipartite_limit",
            ConstName::EulerInvExp => "euler_inv_exp",
        }
    }
}

/// A certified rational enclosure of a real constant; width < 1e-12.
#[derive(Debug, Clone)]
pub struct CertifiedConstant {
    pub name: ConstName,
    pub enclosure: RatInterval,
}

impl CertifiedConstant {
    pub fn decimal(&self) -> String {
        dec_sig(&self.enclosure.lo, 6)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name.id(),
            "lower": { "num": self.enclosure.lo.numer().to_string(),
                       "den": self.enclosure.lo.denom().to_string() },
            "upper": { "num": self.enclosure.hi.numer().to_string(),
                       "den": self.enclosure.hi.denom().to_string() },
            "dec": self.decimal(),
        })
    }
}

/// Enclosure of e^(1/e).
pub fn exp_inv_e() -> RatInterval {
    let e = e_enclosure(E_TERMS);
    exp_enclosure(&e.recip(), E_TERMS)
}

/// Enclosure of e^(-1/e).
pub fn spanning_limit() -> RatInterval {
    exp_inv_e().recip()
}

/// Certified enclosures of the four limit constants.
pub fn limit_constants() -> Vec<CertifiedConstant> {
    let e = e_enclosure(E_TERMS);
    let inv_e = e.recip();
    let eie = exp_enclosure(&inv_e, E_TERMS);
    let span = eie.recip();
    let near = span.mul(&inv_e);
    let bip = span.square();
    vec![
        CertifiedConstant {
            name: ConstName::SpanningLimit,
            enclosure: span,
        },
        CertifiedConstant {
            name: ConstName::NearSpanningLimit,
            enclosure: near,
        },
        CertifiedConstant {
            name: ConstName::BipartiteLimit,
            enclosure: bip,
        },
        CertifiedConstant {
            name: ConstName::EulerInvExp,
            enclosure: eie,
        },
    ]
}

/// Record of one inequality instance: an exact left side against a
/// certified enclosure of the right side.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub n: u64,
    pub lhs: ExactRatio,
    pub rhs_lower: ExactRatio,
    pub rhs_upper: ExactRatio,
    pub verdict: bool,
    /// For the sandwich check: upper bound on |lhs - e^(1/e)|.
    pub gap_to_limit: Option<ExactRatio>,
}

impl BoundCheck {
    pub fn to_json(&self, check: &str) -> serde_json::Value {
        let mut v = serde_json::json!({
            "check": check,
            "n": self.n,
            "lhs": ratio_json(&self.lhs),
            "rhs_lower": ratio_json(&self.rhs_lower),
            "rhs_upper": ratio_json(&self.rhs_upper),
            "verdict": self.verdict,
        });
        if let Some(g) = &self.gap_to_limit {
            v["gap_to_limit"] = serde_json::Value::String(dec_sig(g, 6));
        }
        v
    }
}

/// Check B > (n-3) n^(n-2) e^(1/e) with B computed exactly; the verdict
/// compares against the upper end of the enclosure, so true is a proof.
pub fn verify_b_lower_bound(n: u64) -> Result<BoundCheck> {
    if n < 4 {
        return Err(ArborError::domain("B lower bound requires n >= 4"));
    }
    let counts = closed_form::complete_counts(n)?;
    let s = stats::global_stats(&counts, n)?;
    let b = nat_to_ratio(&s.total_edges_used);
    let factor = nat_to_ratio(&(crate::num::nat(n - 3) * crate::num::nat_pow(n, n - 2)));
    let rhs = exp_inv_e().scale(&factor);
    let verdict = b > rhs.hi;
    Ok(BoundCheck {
        n,
        lhs: b,
        rhs_lower: rhs.lo,
        rhs_upper: rhs.hi,
        verdict,
        gap_to_limit: None,
    })
}

/// Check A / a_{n-1} >= sum_{i=0}^{n-1} 1/(i! e^i) with A exact. The n = 2
/// base case degenerates to the i = 0 term alone. Also reports the gap to
/// e^(1/e), since A / a_{n-1} = 1/p_n converges to it.
pub fn verify_a_sandwich(n: u64) -> Result<BoundCheck> {
    if n < 2 {
        return Err(ArborError::domain("A sandwich requires n >= 2"));
    }
    let counts = closed_form::complete_counts(n)?;
    let s = stats::global_stats(&counts, n)?;
    let a = nat_to_ratio(&s.total_subtrees);
    let spanning = nat_to_ratio(counts.counts.last().unwrap());
    let lhs = &a / &spanning;

    let e = e_enclosure(E_TERMS);
    let upper_index = if n == 2 { 0 } else { n - 1 };
    let mut sum = RatInterval::point(ExactRatio::from_integer(BigInt::from(0)));
    let mut e_pow = RatInterval::point(ExactRatio::from_integer(BigInt::from(1)));
    let mut fact = BigInt::from(1);
    for i in 0..=upper_index {
        if i > 0 {
            e_pow = e_pow.mul(&e);
            fact *= BigInt::from(i);
        }
        let term = e_pow
            .recip()
            .scale(&BigRational::new(BigInt::from(1), fact.clone()));
        sum = sum.add(&term);
    }
    let verdict = lhs >= sum.hi;
    let gap = exp_inv_e().distance_upper(&lhs);
    Ok(BoundCheck {
        n,
        lhs,
        rhs_lower: sum.lo,
        rhs_upper: sum.hi,
        verdict,
        gap_to_limit: Some(gap),
    })
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub stats: StatsReport,
    /// Upper bounds on |p_n - e^(-1/e)| and |q_n - e^(-1/e)|.
    pub gap_p: ExactRatio,
    pub gap_q: ExactRatio,
}

/// One row per requested n, exact values plus gap columns against the
/// certified spanning limit.
pub fn convergence_table(n_values: &[u64]) -> Result<Vec<TableRow>> {
    let limit = spanning_limit();
    n_values
        .iter()
        .map(|&n| {
            let counts = closed_form::complete_counts(n)?;
            let s = stats::global_stats(&counts, n)?;
            let gap_p = limit.distance_upper(&s.p);
            let gap_q = limit.distance_upper(&s.q);
            Ok(TableRow {
                stats: s,
                gap_p,
                gap_q,
            })
        })
        .collect()
}

/// CSV with header "n,p,q,mu_p,mu_q,gap_p,gap_q", 6 significant digits.
pub fn table_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,p,q,mu_p,mu_q,gap_p,gap_q\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.stats.n,
            dec_sig(&r.stats.p, 6),
            dec_sig(&r.stats.q, 6),
            dec_sig(&r.stats.mu_p, 6),
            dec_sig(&r.stats.mu_q, 6),
            dec_sig(&r.gap_p, 6),
            dec_sig(&r.gap_q, 6),
        );
    }
    out
}

#[derive(Debug, Clone)]
pub struct NearSpanningStats {
    pub n: u64,
    /// a_{n-1} / a_{n-2}, which tends to e.
    pub ratio: ExactRatio,
    /// probability of drawing an (n-2)-edge subtree under each measure
    pub prob_uniform: ExactRatio,
    pub prob_weighted: ExactRatio,
}

impl NearSpanningStats {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "ratio": ratio_json(&self.ratio),
            "prob_uniform": ratio_json(&self.prob_uniform),
            "prob_weighted": ratio_json(&self.prob_weighted),
        })
    }
}

pub fn near_spanning_stats(n: u64) -> Result<NearSpanningStats> {
    if n < 3 {
        return Err(ArborError::domain("near-spanning stats require n >= 3"));
    }
    let counts = closed_form::complete_counts(n)?;
    let s = stats::global_stats(&counts, n)?;
    let len = counts.counts.len();
    let a_top = nat_to_ratio(&counts.counts[len - 1]);
    let a_prev = nat_to_ratio(&counts.counts[len - 2]);
    let ratio = &a_top / &a_prev;
    let prob_uniform = &a_prev / nat_to_ratio(&s.total_subtrees);
    let prob_weighted =
        &a_prev * ExactRatio::from_integer(BigInt::from(n - 2)) / nat_to_ratio(&s.total_edges_used);
    Ok(NearSpanningStats {
        n,
        ratio,
        prob_uniform,
        prob_weighted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio_u;
    use num_traits::Signed;

    #[test]
    fn constants_digits() {
        let consts = limit_constants();
        let by_id = |id: &str| {
            consts
                .iter()
                .find(|c| c.name.id() == id)
                .unwrap()
                .clone()
        };
        let span = by_id("spanning_limit");
        assert_eq!(span.decimal(), "0.692201");
        assert_eq!(by_id("near_spanning_limit").decimal(), "0.254646");
        assert_eq!(by_id("euler_inv_exp").decimal(), "1.44467");
        // e^(-2/e) is the square of the spanning limit
        let bip = by_id("bipartite_limit");
        let sq = span.enclosure.square();
        assert!(bip.enclosure.lo <= sq.hi && sq.lo <= bip.enclosure.hi);
        assert_eq!(dec_sig(&bip.enclosure.lo, 6), "0.479142");
        for c in &consts {
            assert!(c.enclosure.width() < ratio_u(1, 1_000_000_000_000));
            // both ends agree at 6 significant digits
            assert_eq!(dec_sig(&c.enclosure.lo, 6), dec_sig(&c.enclosure.hi, 6));
        }
    }

    #[test]
    fn b_lower_bound_small() {
        let c = verify_b_lower_bound(4).unwrap();
        assert!(c.verdict);
        assert_eq!(c.lhs, ratio_u(78, 1));
        // RHS = 16 e^(1/e) ~ 23.11
        assert_eq!(dec_sig(&c.rhs_upper, 4), "23.11");
        assert!(verify_b_lower_bound(10).unwrap().verdict);
        assert!(verify_b_lower_bound(3).is_err());
    }

    #[test]
    fn a_sandwich_small() {
        let c = verify_a_sandwich(4).unwrap();
        assert!(c.verdict);
        assert_eq!(c.lhs, ratio_u(34, 16));
        // sum_{i=0}^{3} 1/(i! e^i) = 1.44384...
        assert_eq!(dec_sig(&c.rhs_upper, 5), "1.4438");

        let c2 = verify_a_sandwich(2).unwrap();
        assert!(c2.verdict);
        assert_eq!(c2.lhs, ratio_u(1, 1));
        assert_eq!(c2.rhs_upper, ratio_u(1, 1));
    }

    #[test]
    fn a_sandwich_gap_at_100() {
        let c = verify_a_sandwich(100).unwrap();
        assert!(c.verdict);
        assert!(c.gap_to_limit.unwrap() < ratio_u(2, 100));
    }

    #[test]
    fn table_matches_printed_rows() {
        let rows = convergence_table(&[10, 50, 100]).unwrap();
        assert_eq!(dec_sig(&rows[0].stats.p, 6), "0.617473");
        assert_eq!(dec_sig(&rows[1].stats.p, 6), "0.67909");
        assert_eq!(dec_sig(&rows[2].stats.q, 6), "0.688365");
        assert_eq!(dec_sig(&rows[1].stats.mu_p, 6), "0.9921");
    }

    #[test]
    fn table_degenerate_row() {
        let rows = convergence_table(&[2]).unwrap();
        assert_eq!(rows[0].stats.p, ratio_u(1, 1));
        assert_eq!(rows[0].stats.mu_q, ratio_u(1, 1));
    }

    #[test]
    fn csv_shape() {
        let csv = table_to_csv(&convergence_table(&[10]).unwrap());
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "n,p,q,mu_p,mu_q,gap_p,gap_q");
        assert!(lines.next().unwrap().starts_with("10,0.617473,0.652736,"));
    }

    #[test]
    fn near_spanning_small() {
        let s = near_spanning_stats(4).unwrap();
        assert_eq!(s.ratio, ratio_u(4, 3));
        assert_eq!(s.prob_uniform, ratio_u(12, 34));
        assert_eq!(s.prob_weighted, ratio_u(24, 78));
        assert!(near_spanning_stats(2).is_err());
    }

    #[test]
    fn near_spanning_converges() {
        let s = near_spanning_stats(100).unwrap();
        let e = e_enclosure(E_TERMS);
        // ratio = (1 + 1/(n-1))^(n-3), about e - 0.068 at n = 100
        assert!((&s.ratio - &e.lo).abs() < ratio_u(1, 10));
        let near = limit_constants()
            .into_iter()
            .find(|c| c.name == ConstName::NearSpanningLimit)
            .unwrap();
        assert!(near.enclosure.distance_upper(&s.prob_uniform) < ratio_u(2, 100));
    }

    #[test]
    fn bookkeeping_identities() {
        for n in [4u64, 7, 12, 25] {
            let counts = closed_form::complete_counts(n).unwrap();
            let s = stats::global_stats(&counts, n).unwrap();
            let a = nat_to_ratio(&s.total_subtrees);
            let top = nat_to_ratio(counts.counts.last().unwrap());
            assert_eq!(&a / &top, s.p.recip());
            assert_eq!(s.q, &s.p / &s.mu_p);
        }
    }
}
