//! Fixtures shared by the benchmarks.

use nbc::classify::enumerate_cubic;
use nbc::families::{gen_pappus, gen_petersen, PappusParams, PetersenParams};
use nbc::Graph;

/// Generalized Petersen graphs `G(m, 1)` for the given ring lengths.
pub fn petersen_prisms(ms: &[usize]) -> Vec<(usize, Graph)> {
    ms.iter()
        .map(|&m| (m, gen_petersen(PetersenParams::new(m, 1).expect("m >= 5"))))
        .collect()
}

/// `P(m, 1, m/2)`, balanced whenever `6 | m`.
pub fn pappus_cubic(m: usize) -> Graph {
    gen_pappus(PappusParams::new(m, 1, m / 2).expect("even m >= 4"))
}

/// The 85 connected cubic graphs on 12 vertices.
pub fn cubic_12() -> Vec<Graph> {
    enumerate_cubic(12).expect("12 is in range")
}
