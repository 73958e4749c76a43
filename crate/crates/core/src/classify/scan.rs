use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balance::{is_3_balanced, solve_3_balanced, Coloring, SolverConfig};
use crate::families::{
    gen_pappus, gen_petersen, mobius_coloring, mobius_ladder, pappus_coloring, petersen_coloring,
    PappusParams, PetersenParams,
};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanFamily {
    /// `G(m, j)` for every valid `j`; the range is over `m`.
    Petersen,
    /// `P(m, j, k)` for every valid `j, k`; the range is over `m`.
    Pappus,
    /// `M_n` for even `n`; the range is over `n`.
    Mobius,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub family: ScanFamily,
    /// `G(m,j)`, `P(m,j,k)` or `M_n`.
    pub label: String,
    pub params: Vec<usize>,
    pub vertices: usize,
    /// Solver verdict; `None` if the budget ran out.
    pub solvable: Option<bool>,
    pub predicted: bool,
    /// When predicted balanced, whether the family's explicit coloring
    /// verifies.
    pub explicit_coloring_verifies: Option<bool>,
    pub agree: bool,
    pub nodes: u64,
}

struct Instance {
    label: String,
    params: Vec<usize>,
    graph: Graph,
    predicted: bool,
    explicit: Option<Coloring>,
}

fn instances(family: ScanFamily, range: RangeInclusive<usize>) -> Vec<Instance> {
    match family {
        ScanFamily::Petersen => PetersenParams::all(range)
            .into_iter()
            .map(|p| Instance {
                label: format!("G({},{})", p.m(), p.j()),
                params: vec![p.m(), p.j()],
                graph: gen_petersen(p),
                predicted: p.predicted_balanced(),
                explicit: petersen_coloring(p).ok(),
            })
            .collect(),
        ScanFamily::Pappus => PappusParams::all(range)
            .into_iter()
            .map(|p| Instance {
                label: format!("P({},{},{})", p.m(), p.j(), p.k()),
                params: vec![p.m(), p.j(), p.k()],
                graph: gen_pappus(p),
                predicted: p.predicted_balanced(),
                explicit: pappus_coloring(p).ok(),
            })
            .collect(),
        ScanFamily::Mobius => range
            .filter(|&n| n >= 4 && n % 2 == 0)
            .map(|n| Instance {
                label: format!("M_{n}"),
                params: vec![n],
                graph: mobius_ladder(n).expect("even n >= 4"),
                predicted: n % 6 == 0,
                explicit: mobius_coloring(n).ok(),
            })
            .collect(),
    }
}

/// Solves every family member in the range and compares the verdict with
/// the predicted condition.
pub fn family_scan(family: ScanFamily, range: RangeInclusive<usize>, config: SolverConfig) -> Vec<ScanRow> {
    instances(family, range)
        .into_par_iter()
        .map(|inst| {
            let outcome = solve_3_balanced(&inst.graph, config);
            let solvable = match outcome.coloring() {
                Some(c) => Some(is_3_balanced(&inst.graph, c).expect("solver output has n labels")),
                None => outcome.verdict(),
            };
            let explicit_coloring_verifies = inst.predicted.then(|| {
                inst.explicit
                    .as_ref()
                    .is_some_and(|c| is_3_balanced(&inst.graph, c).unwrap_or(false))
            });
            let agree = solvable == Some(inst.predicted) && explicit_coloring_verifies != Some(false);
            ScanRow {
                family,
                label: inst.label,
                params: inst.params,
                vertices: inst.graph.n(),
                solvable,
                predicted: inst.predicted,
                explicit_coloring_verifies,
                agree,
                nodes: outcome.nodes(),
            }
        })
        .collect()
}
