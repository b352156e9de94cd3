//! Matching numbers of graphs with bounded maximum degree.
//!
//! The crate computes maximum matchings (with an exhaustive Tutte–Berge
//! oracle), evaluates the exact lower bounds on the matching number in terms
//! of order, size and component count, generates the extremal families that
//! attain those bounds, and models the convex region `L_k` of coefficient
//! pairs `(γ, β)` for which `α'(G) >= γ n + β m - K` holds over all connected
//! graphs with maximum degree at most `k`.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod fuzz;
pub mod graph;
pub mod matching;
pub mod rational;
pub mod region;

pub use graph::{ComponentPartition, DegreeProfile, Graph, GraphError};
pub use matching::{maximum_matching, tutte_berge, Matching, TutteBergeCertificate};
pub use rational::Rational;
