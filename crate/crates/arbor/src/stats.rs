//! The four spanning/density statistics, global and local, all exact.
//!
//! With a_k the number of k-edge subtrees, A = sum a_k and B = sum k a_k:
//!   p  = a_{n-1} / A            q    = (n-1) a_{n-1} / B
//!   mu_p = B / ((n-1) A)        mu_q = sum k^2 a_k / ((n-1) B)

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::closed_form::{self, CountVector};
use crate::error::{ArborError, Result};
use crate::num::{nat, ratio_json, ExactRatio, Natural};
use crate::poly::SubtreePolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatsReport {
    pub n: u64,
    pub p: ExactRatio,
    pub q: ExactRatio,
    pub mu_p: ExactRatio,
    pub mu_q: ExactRatio,
    pub total_subtrees: Natural,
    pub total_edges_used: Natural,
}

impl StatsReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "p": ratio_json(&self.p),
            "q": ratio_json(&self.q),
            "mu_p": ratio_json(&self.mu_p),
            "mu_q": ratio_json(&self.mu_q),
            "A": self.total_subtrees.to_string(),
            "B": self.total_edges_used.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalStatsReport {
    pub n: u64,
    pub p_local: ExactRatio,
    pub q_local: ExactRatio,
    pub mu_p_local: ExactRatio,
    pub mu_q_local: ExactRatio,
}

impl LocalStatsReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "p_local": ratio_json(&self.p_local),
            "q_local": ratio_json(&self.q_local),
            "mu_p_local": ratio_json(&self.mu_p_local),
            "mu_q_local": ratio_json(&self.mu_q_local),
        })
    }
}

/// Global statistics from counts a_1.. (index i holds a_{i+1}).
/// The spanning count is the entry for size n-1, zero if absent.
pub fn global_stats_from_counts(counts: &[Natural], n: u64) -> Result<StatsReport> {
    if n < 2 {
        return Err(ArborError::domain("global stats require n >= 2"));
    }
    let mut a = Natural::zero();
    let mut b = Natural::zero();
    let mut b2 = Natural::zero();
    for (i, c) in counts.iter().enumerate() {
        let k = nat(i as u64 + 1);
        a += c;
        b += &k * c;
        b2 += &k * &k * c;
    }
    if a.is_zero() {
        return Err(ArborError::domain("count vector has no subtrees"));
    }
    let spanning = counts
        .get(n as usize - 2)
        .cloned()
        .unwrap_or_else(Natural::zero);
    let nm1 = BigInt::from(n - 1);
    let p = BigRational::new(
        BigInt::from(spanning.clone()),
        BigInt::from(a.clone()),
    );
    let q = if b.is_zero() {
        // only possible when there are no subtrees at all, handled above
        unreachable!()
    } else {
        BigRational::new(
            &nm1 * BigInt::from(spanning),
            BigInt::from(b.clone()),
        )
    };
    let mu_p = BigRational::new(BigInt::from(b.clone()), &nm1 * BigInt::from(a.clone()));
    let mu_q = BigRational::new(BigInt::from(b2), &nm1 * BigInt::from(b.clone()));
    Ok(StatsReport {
        n,
        p,
        q,
        mu_p,
        mu_q,
        total_subtrees: a,
        total_edges_used: b,
    })
}

pub fn global_stats(counts: &CountVector, n: u64) -> Result<StatsReport> {
    global_stats_from_counts(&counts.counts, n)
}

/// Global statistics from a subtree polynomial; the constant term is
/// ignored (every statistic sums over k >= 1).
pub fn global_stats_from_polynomial(poly: &SubtreePolynomial) -> Result<StatsReport> {
    global_stats_from_counts(poly.positive_counts(), poly.vertex_count() as u64)
}

/// The four local statistics of K_n for a fixed edge, from the local count
/// vector.
pub fn local_stats_complete(n: u64) -> Result<LocalStatsReport> {
    if n < 3 {
        return Err(ArborError::domain("local stats require n >= 3"));
    }
    let counts = closed_form::complete_local_counts(n)?;
    let mut total = Natural::zero();
    let mut weighted = Natural::zero();
    let mut weighted2 = Natural::zero();
    for (i, c) in counts.counts.iter().enumerate() {
        let s = nat(i as u64 + 1);
        total += c;
        weighted += &s * c;
        weighted2 += &s * &s * c;
    }
    let top = counts.counts.last().unwrap().clone();
    let nm1 = BigInt::from(n - 1);
    let p_local = BigRational::new(BigInt::from(top.clone()), BigInt::from(total.clone()));
    let q_local = BigRational::new(&nm1 * BigInt::from(top), BigInt::from(weighted.clone()));
    let mu_p_local = BigRational::new(
        BigInt::from(weighted.clone()),
        &nm1 * BigInt::from(total),
    );
    let mu_q_local = BigRational::new(BigInt::from(weighted2), &nm1 * BigInt::from(weighted));
    Ok(LocalStatsReport {
        n,
        p_local,
        q_local,
        mu_p_local,
        mu_q_local,
    })
}

/// Densities straight from the polynomial and its derivatives at 1:
/// mu_p = s'(1) / ((n-1) s(1)), mu_q = (s'(1) + s''(1)) / ((n-1) s'(1)).
pub fn density_from_polynomial(poly: &SubtreePolynomial) -> Result<(ExactRatio, ExactRatio)> {
    let n = poly.vertex_count() as u64;
    if poly.positive_counts().iter().all(|c| c.is_zero()) {
        return Err(ArborError::domain(
            "degenerate polynomial: no positive-degree coefficient",
        ));
    }
    let one = ExactRatio::one();
    let (s, s1, s2) = poly.eval_derivatives(&one);
    let nm1 = ExactRatio::from_integer(BigInt::from(n - 1));
    let mu_p = &s1 / (&nm1 * &s);
    let mu_q = (&s1 + &s2) / (&nm1 * &s1);
    Ok((mu_p, mu_q))
}
