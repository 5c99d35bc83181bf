//! Exact computation laboratory for efficient k-limited broadcast
//! domination.
//!
//! A broadcast assigns each vertex an integer cost; a vertex hears every
//! broadcaster within that broadcaster's cost in hop distance. A k-limited
//! dominating broadcast caps costs at k and reaches every vertex; it is
//! *efficient* when every vertex hears exactly one broadcaster. This crate
//! builds the standard graph families and products, computes the minimum
//! covering radius mcr(G), the optimal cost gamma_ebk(G), and the covering
//! number F_k(G) exactly with witnesses, cross-checks the closed-form
//! values known for those families, and constructs and empirically
//! verifies an EXACT 3-SAT hardness gadget.

pub mod broadcast;
pub mod corpus;
pub mod distance;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod parallel;
pub mod products;
pub mod reduction;
pub mod solver;
pub mod sweep;

pub use broadcast::{classify, influence, Broadcast, HearingReport, Influence};
pub use distance::{
    all_pairs_distances, all_pairs_distances_saturating, ball, Ball, DistanceMatrix,
};
pub use error::{Error, Result};
pub use families::{build_tk, generate, subdivided_star, Family};
pub use graph::{parse_graph, serialize_graph, serialize_labels, Graph};
pub use products::{product, ProductKind};
pub use solver::{
    brute_force_oracle, enumerate_balls, enumerate_optimal, exists_k_eldb, f_k, gamma_ebk, mcr,
    min_k_without_cost_one, solve, Objective, SolveResult, SolverConfig,
};
