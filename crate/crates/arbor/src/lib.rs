//! arbor: exact subtree statistics of graphs.
//!
//! Everything numeric is exact — arbitrary-precision integers, reduced
//! rationals, and certified rational enclosures for the handful of real
//! limit constants. Floating point appears only in clearly labeled
//! display columns.
//!
//! The crate computes, for a graph G with subtree counts a_k:
//! - the subtree polynomial s_G(x) = sum a_k x^k, by closed form where one
//!   exists and by exact enumeration otherwise;
//! - the spanning probabilities p (uniform) and q (edge-weighted) and the
//!   subtree densities mu_p, mu_q, globally and locally at a fixed edge;
//! - certified bound checks and convergence tables for the complete-graph
//!   asymptotics;
//! - seeded exact-marginal random subtree sampling under both measures;
//! - mechanical unimodality / density-monotonicity / p = q mu_p checks over
//!   exhaustive small-graph universes and parameterized families.

pub mod asymptotics;
pub mod closed_form;
pub mod conjectures;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod interval;
pub mod num;
pub mod poly;
pub mod sampler;
pub mod stats;

pub mod cli;

pub use error::{ArborError, Result};
pub use graph::{build_family, Family, Graph};
pub use poly::SubtreePolynomial;
