//! Exact independence polynomials of rooted trees.
//!
//! Builds the path, starlike S_{2,t}, T_{m,t} and TG_{m,t} trees, computes
//! their independence polynomials with three independent engines plus closed
//! forms, and locates the indices where log-concavity of the coefficient
//! sequence breaks.

pub mod analysis;
pub mod canon;
pub mod cli;
pub mod engines;
pub mod family;
pub mod poly;
pub mod tree;

pub use analysis::{log_concavity_report, LogConcavityReport};
pub use engines::{indpoly_bruteforce, indpoly_dp, indpoly_recursive, Engine};
pub use family::{build_family, FamilyKind, FamilySpec};
pub use poly::DensePolynomial;
pub use tree::RootedTree;
