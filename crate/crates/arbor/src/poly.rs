//! The subtree polynomial s_G(x) = sum a_k x^k, with exact coefficients.

use num_traits::Zero;

use crate::num::{nat, nat_to_ratio, ExactRatio, Natural};

/// Coefficient vector of the subtree polynomial, indexed by edge count.
/// Index 0 is stored and defaults to 0; `with_vertex_term` sets a_0 = n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreePolynomial {
    coefficients: Vec<Natural>,
    vertex_count: u32,
}

impl SubtreePolynomial {
    /// Build from coefficients a_0..a_d. Panics if more than vertex_count
    /// entries are supplied.
    pub fn new(coefficients: Vec<Natural>, vertex_count: u32) -> SubtreePolynomial {
        assert!(
            coefficients.len() <= vertex_count as usize,
            "subtree polynomial degree must stay below the vertex count"
        );
        SubtreePolynomial {
            coefficients,
            vertex_count,
        }
    }

    /// Build from counts a_1..a_d (no constant term).
    pub fn from_counts(counts: &[Natural], vertex_count: u32) -> SubtreePolynomial {
        let mut coefficients = Vec::with_capacity(counts.len() + 1);
        coefficients.push(Natural::zero());
        coefficients.extend_from_slice(counts);
        SubtreePolynomial::new(coefficients, vertex_count)
    }

    /// Same polynomial with a_0 = n (counting single vertices as subtrees).
    pub fn with_vertex_term(mut self) -> SubtreePolynomial {
        self.coefficients[0] = nat(self.vertex_count as u64);
        self
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn coefficients(&self) -> &[Natural] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Natural {
        self.coefficients.get(k).cloned().unwrap_or_else(Natural::zero)
    }

    /// Coefficients for edge counts k >= 1 (the range every statistic sums
    /// over).
    pub fn positive_counts(&self) -> &[Natural] {
        if self.coefficients.is_empty() {
            &[]
        } else {
            &self.coefficients[1..]
        }
    }

    /// Exact (s, s', s'') at a rational point.
    pub fn eval_derivatives(&self, point: &ExactRatio) -> (ExactRatio, ExactRatio, ExactRatio) {
        let mut s = ExactRatio::zero();
        let mut s1 = ExactRatio::zero();
        let mut s2 = ExactRatio::zero();
        // Horner from the top coefficient down
        for c in self.coefficients.iter().rev() {
            let c = nat_to_ratio(c);
            s2 = &s2 * point + &s1 * ExactRatio::from_integer(2.into());
            s1 = &s1 * point + &s;
            s = &s * point + c;
        }
        (s, s1, s2)
    }

    /// JSON array of decimal strings, low-to-high degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coefficients
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}
