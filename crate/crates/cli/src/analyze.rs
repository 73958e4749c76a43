use anyhow::{bail, Result};
use serde::Serialize;

use nbc::cubic::{
    alternating_cycle_cover, check_sum_characterization, dataset_from_colored_graph, find_tait_coloring,
    forbidden_scan, graph_from_dataset, induced_edge_coloring, is_tait, matchings_from_edge_coloring,
    reconstruct_vertex_coloring, CubicDataset, EdgeColoring, ForbiddenPattern, CYCLE_ENUMERATION_MAX_VERTICES,
};
use nbc::graph::{canonical_form_colored, emit_graph6, CANON_MAX_VERTICES};
use nbc::{is_3_balanced, solve_3_balanced, Coloring, EdgeId, Graph, SolverConfig, Z3};

#[derive(Serialize)]
pub struct CubicReport {
    graph6: String,
    n: usize,
    has_bridge: bool,
    forbidden: Vec<ForbiddenPattern>,
    tait_colorable: bool,
    /// `None` when the solver budget ran out.
    balanced: Option<bool>,
    nodes: u64,
    coloring: Option<Coloring>,
    witness: Option<Witness>,
    pub checks_passed: bool,
}

/// Structure derived from a balanced coloring.
#[derive(Serialize)]
struct Witness {
    verified: bool,
    edge_coloring: EdgeColoring,
    is_tait: bool,
    matchings: [Vec<EdgeId>; 3],
    /// Lengths of the cycles in each two-color union, for colors
    /// `(0,1)`, `(0,2)`, `(1,2)`.
    alternating_cycle_lengths: [Vec<usize>; 3],
    /// Skipped (`None`) above the cycle-enumeration limit.
    sum_characterization: Option<bool>,
    reconstruction_induces_same_edges: bool,
    dataset: Option<CubicDataset>,
    /// Skipped (`None`) above the canonical-form limit.
    dataset_round_trip: Option<bool>,
}

impl Witness {
    fn passed(&self) -> bool {
        self.verified
            && self.is_tait
            && self.sum_characterization != Some(false)
            && self.reconstruction_induces_same_edges
            && self.dataset_round_trip != Some(false)
    }
}

fn witness(g: &Graph, c: &Coloring) -> Result<Witness> {
    let ec = induced_edge_coloring(g, c)?;
    let tait = is_tait(g, &ec);
    if !tait {
        // Cannot happen for a balanced coloring; report rather than abort.
        return Ok(Witness {
            verified: is_3_balanced(g, c)?,
            is_tait: false,
            matchings: Default::default(),
            alternating_cycle_lengths: Default::default(),
            sum_characterization: None,
            reconstruction_induces_same_edges: false,
            dataset: None,
            dataset_round_trip: None,
            edge_coloring: ec,
        });
    }
    let pairs = [(Z3::ZERO, Z3::ONE), (Z3::ZERO, Z3::TWO), (Z3::ONE, Z3::TWO)];
    let mut lengths: [Vec<usize>; 3] = Default::default();
    for (slot, (i, j)) in lengths.iter_mut().zip(pairs) {
        *slot = alternating_cycle_cover(g, &ec, i, j)?.iter().map(Vec::len).collect();
    }
    let sum_characterization = if g.n() <= CYCLE_ENUMERATION_MAX_VERTICES {
        Some(check_sum_characterization(g, &ec)?)
    } else {
        None
    };
    let reconstruction_induces_same_edges = reconstruct_vertex_coloring(g, &ec)
        .ok()
        .and_then(|r| induced_edge_coloring(g, &r).ok())
        .is_some_and(|r| r == ec);
    let dataset = dataset_from_colored_graph(g, c)?;
    let dataset_round_trip = (g.n() <= CANON_MAX_VERTICES).then(|| {
        graph_from_dataset(&dataset).is_ok_and(|(g2, c2)| {
            canonical_form_colored(g, &c.as_bytes()).ok() == canonical_form_colored(&g2, &c2.as_bytes()).ok()
        })
    });
    Ok(Witness {
        verified: is_3_balanced(g, c)?,
        is_tait: tait,
        matchings: matchings_from_edge_coloring(g, &ec)?,
        alternating_cycle_lengths: lengths,
        sum_characterization,
        reconstruction_induces_same_edges,
        dataset: Some(dataset),
        dataset_round_trip,
        edge_coloring: ec,
    })
}

pub fn analyze(g: &Graph, config: SolverConfig) -> Result<CubicReport> {
    if !g.is_cubic() {
        bail!("graph is not cubic");
    }
    let scan = forbidden_scan(g)?;
    let tait_colorable = find_tait_coloring(g)?.is_some();
    let outcome = solve_3_balanced(g, config);
    let nodes = outcome.nodes();
    let balanced = outcome.verdict();
    let coloring = outcome.into_coloring();
    let witness = coloring.as_ref().map(|c| witness(g, c)).transpose()?;
    let checks_passed = match balanced {
        Some(true) => witness.as_ref().is_some_and(Witness::passed) && !scan.excludes() && tait_colorable,
        Some(false) => solve_3_balanced(g, config.reversed()).is_none(),
        None => true,
    };
    Ok(CubicReport {
        graph6: emit_graph6(g),
        n: g.n(),
        has_bridge: scan.has_bridge,
        forbidden: scan.patterns,
        tait_colorable,
        balanced,
        nodes,
        coloring,
        witness,
        checks_passed,
    })
}
