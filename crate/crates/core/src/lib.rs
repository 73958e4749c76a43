//! Neighborhood 3-balanced vertex colorings of finite simple graphs.
//!
//! A coloring `l: V -> Z3` is *3-balanced* when every open neighborhood
//! contains the same number of vertices of each color. This crate provides
//! the graph substrate, verifiers and an exact backtracking solver, the named
//! graph families with their explicit colorings, the cubic-graph
//! characterizations (Tait colorings, alternating cycle sums, datasets),
//! exact circulant/cyclotomic checks, and cubic-graph enumeration and
//! classification.
//!
//! Vertex ids are dense integers `0..n`. Family generators document their
//! layout in [`families`].

pub mod balance;
pub mod circulant;
pub mod classify;
pub mod cubic;
pub mod families;
pub mod graph;
mod z3;

pub use balance::{
    is_2_balanced, is_3_balanced, normalize_coloring, order_precheck, solve_2_balanced,
    solve_3_balanced, stats, BalanceError, ColorClassStats, Coloring, Precheck, PrecheckFailure,
    SignedColoring, SolveOutcome, SolverConfig, DEFAULT_BUDGET,
};
pub use graph::{EdgeId, Graph, GraphError};
pub use z3::Z3;
