use serde::{Deserialize, Serialize};

use super::{require_cubic, CubicError};
use crate::graph::{bridges, subgraph_monomorphism_exists, Graph};

/// Subgraphs that no 3-balanced cubic graph contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ForbiddenPattern {
    /// `K4` minus an edge.
    D,
    /// Two triangles joined by a path of length two.
    EB,
    /// A 4-cycle with a path of length four between opposite corners.
    F1,
    /// An 8-cycle with two crossing chords.
    F2,
    /// A 7-cycle with a two-edge path from one cycle vertex to a hub adjacent
    /// to two further cycle vertices.
    F3,
    /// A 5-cycle with a three-vertex path whose ends attach to the cycle.
    F4,
}

impl ForbiddenPattern {
    pub const ALL: [ForbiddenPattern; 6] = [
        ForbiddenPattern::D,
        ForbiddenPattern::EB,
        ForbiddenPattern::F1,
        ForbiddenPattern::F2,
        ForbiddenPattern::F3,
        ForbiddenPattern::F4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenPattern::D => "D",
            ForbiddenPattern::EB => "EB",
            ForbiddenPattern::F1 => "F1",
            ForbiddenPattern::F2 => "F2",
            ForbiddenPattern::F3 => "F3",
            ForbiddenPattern::F4 => "F4",
        }
    }

    pub fn from_name(name: &str) -> Option<ForbiddenPattern> {
        Self::ALL.into_iter().find(|p| p.name() == name)
    }

    /// Vertex count and edge list.
    pub fn edges(self) -> (usize, Vec<(usize, usize)>) {
        let ring = |k: usize| (0..k).map(move |i| (i, (i + 1) % k));
        match self {
            ForbiddenPattern::D => (4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]),
            ForbiddenPattern::EB => (7, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 6), (3, 6)]),
            // Cycle 0-1-2-3, path 2-4-5-6-0.
            ForbiddenPattern::F1 => (7, ring(4).chain([(2, 4), (4, 5), (5, 6), (6, 0)]).collect()),
            // Cycle 0..8, chords 3-1 and 0-4.
            ForbiddenPattern::F2 => (8, ring(8).chain([(3, 1), (0, 4)]).collect()),
            // Cycle 0..7, 0-7, hub 8 on 7, 2 and 5.
            ForbiddenPattern::F3 => (9, ring(7).chain([(0, 7), (7, 8), (8, 2), (8, 5)]).collect()),
            // Cycle 0..5, 5-6, 5-7, 6 on 1 and 3, 7 on 4.
            ForbiddenPattern::F4 => (8, ring(5).chain([(5, 6), (5, 7), (6, 1), (6, 3), (7, 4)]).collect()),
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges) = self.edges();
        Graph::from_edges(n, edges).expect("pattern edge lists are simple")
    }
}

impl std::fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenScan {
    pub patterns: Vec<ForbiddenPattern>,
    pub has_bridge: bool,
}

impl ForbiddenScan {
    /// Whether the scan alone rules out a 3-balanced coloring.
    pub fn excludes(&self) -> bool {
        self.has_bridge || !self.patterns.is_empty()
    }
}

/// Which forbidden patterns occur in `g` as (not necessarily induced)
/// subgraphs, and whether `g` has a bridge.
pub fn forbidden_scan(g: &Graph) -> Result<ForbiddenScan, CubicError> {
    require_cubic(g)?;
    let patterns = ForbiddenPattern::ALL
        .into_iter()
        .filter(|p| subgraph_monomorphism_exists(&p.graph(), g))
        .collect();
    Ok(ForbiddenScan {
        patterns,
        has_bridge: !bridges(g).is_empty(),
    })
}
