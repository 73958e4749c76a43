//! Cubic-graph enumeration, corpus classification and family scans.

mod enumerate;
mod scan;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::balance::{is_3_balanced, order_precheck, solve_3_balanced, Coloring, Precheck, SolverConfig};
use crate::cubic::{find_tait_coloring, forbidden_scan, ForbiddenPattern};
use crate::graph::{bridges, canonical_form, emit_graph6, Graph, GraphError, CANON_MAX_VERTICES};

pub use enumerate::{enumerate_cubic, enumerate_cubic_with, AugmentOrder, ENUMERATION_MAX_VERTICES};
pub use scan::{family_scan, ScanFamily, ScanRow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("cubic enumeration needs an even n with 4 <= n <= {ENUMERATION_MAX_VERTICES}, got {0}")]
    BadN(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Balanced {
    Yes,
    No,
    /// The solver ran out of budget before deciding.
    Budget,
}

/// Everything the pipeline learned about one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    /// graph6 of the canonical relabeling (of the input, for graphs too
    /// large to canonize). The witness and all vertex ids refer to it.
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub precheck: Precheck,
    pub balanced: Balanced,
    pub witness: Option<Coloring>,
    pub witness_verified: bool,
    pub nodes: u64,
    /// For `No`: whether a restart with reversed color order also
    /// exhausted the search.
    pub reversed_confirms: Option<bool>,
    /// Forbidden patterns found (cubic graphs only).
    pub forbidden: Vec<ForbiddenPattern>,
    pub has_bridge: bool,
    /// `None` for graphs that are not cubic.
    pub tait_colorable: Option<bool>,
    /// Precheck or forbidden scan already rules out a balanced coloring.
    pub fast_no: bool,
}

impl ClassificationRecord {
    /// The record's internal cross-checks: witnesses verify, fast rejections
    /// agree with the solver, and every `No` is reproduced.
    pub fn consistent(&self) -> bool {
        match self.balanced {
            Balanced::Yes => self.witness_verified && !self.fast_no && self.tait_colorable != Some(false),
            Balanced::No => self.reversed_confirms == Some(true),
            Balanced::Budget => true,
        }
    }

    /// A failed precheck, a bridge, a forbidden pattern or a missing Tait
    /// coloring.
    pub fn explained(&self) -> bool {
        !self.precheck.passed()
            || self.has_bridge || !self.forbidden.is_empty() || self.tait_colorable == Some(false)
    }
}

/// The relabeling that takes `g` to its canonical form (identity for graphs
/// too large to canonize).
fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.n() > CANON_MAX_VERTICES {
        return (0..g.n()).collect();
    }
    canonical_form(g).expect("size checked").labeling().to_vec()
}

/// Runs precheck, forbidden scan and solver on one graph. The solver
/// always runs; the fast checks are recorded and cross-checked against it.
pub fn classify_graph(g: &Graph, config: SolverConfig) -> ClassificationRecord {
    let g = &g.permute(&canonical_labeling(g));
    let precheck = order_precheck(g);
    let cubic = g.is_cubic();
    let (forbidden, has_bridge) = if cubic {
        let s = forbidden_scan(g).expect("cubic");
        (s.patterns, s.has_bridge)
    } else {
        (Vec::new(), !bridges(g).is_empty())
    };
    // A cubic graph with a bridge is also excluded.
    let fast_no = !precheck.passed() || (cubic && (has_bridge || !forbidden.is_empty()));
    let tait_colorable = cubic.then(|| find_tait_coloring(g).expect("cubic").is_some());
    let outcome = solve_3_balanced(g, config);
    let nodes = outcome.nodes();
    let (balanced, witness, reversed_confirms) = match outcome.verdict() {
        Some(true) => (Balanced::Yes, outcome.into_coloring(), None),
        Some(false) => {
            let again = solve_3_balanced(g, config.reversed());
            (Balanced::No, None, Some(again.is_none()))
        }
        None => (Balanced::Budget, None, None),
    };
    let witness_verified = witness
        .as_ref()
        .is_some_and(|c| is_3_balanced(g, c).unwrap_or(false));
    ClassificationRecord {
        graph6: emit_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        precheck,
        balanced,
        witness,
        witness_verified,
        nodes,
        reversed_confirms,
        forbidden,
        has_bridge,
        tait_colorable,
        fast_no,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub total: usize,
    pub balanced: usize,
    pub not_balanced: usize,
    pub budget_exhausted: usize,
    pub precheck_failed: usize,
    /// Counts over non-balanced cubic graphs.
    pub with_bridge: usize,
    pub pattern_counts: BTreeMap<String, usize>,
    pub non_tait: usize,
    /// Non-balanced cubic graphs whose only explanation is the missing Tait
    /// coloring.
    pub only_non_tait: Vec<String>,
    /// Non-balanced cubic graphs with no precheck, bridge, pattern or Tait
    /// obstruction.
    pub unexplained: Vec<String>,
    /// Records whose cross-checks failed.
    pub inconsistent: Vec<String>,
    pub all_checks_passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub records: Vec<ClassificationRecord>,
    pub summary: ClassificationSummary,
}

/// Classifies every graph (in parallel), merging records by canonical
/// graph6 so isomorphic inputs appear once.
pub fn classify_corpus(graphs: &[Graph], config: SolverConfig) -> Classification {
    let records: Vec<ClassificationRecord> = graphs.par_iter().map(|g| classify_graph(g, config)).collect();
    let mut by_key: BTreeMap<String, ClassificationRecord> = BTreeMap::new();
    for r in records {
        by_key.entry(r.graph6.clone()).or_insert(r);
    }
    let records: Vec<ClassificationRecord> = by_key.into_values().collect();
    let summary = summarize(&records);
    Classification { records, summary }
}

/// Enumerates the connected cubic graphs on `n` vertices and classifies them.
pub fn classify_order(n: usize, config: SolverConfig) -> Result<Classification, ClassifyError> {
    Ok(classify_corpus(&enumerate_cubic(n)?, config))
}

pub fn summarize(records: &[ClassificationRecord]) -> ClassificationSummary {
    let mut s = ClassificationSummary {
        total: records.len(),
        ..Default::default()
    };
    for p in ForbiddenPattern::ALL {
        s.pattern_counts.insert(p.name().to_string(), 0);
    }
    for r in records {
        if !r.precheck.passed() {
            s.precheck_failed += 1;
        }
        if !r.consistent() {
            s.inconsistent.push(r.graph6.clone());
        }
        match r.balanced {
            Balanced::Yes => s.balanced += 1,
            Balanced::Budget => s.budget_exhausted += 1,
            Balanced::No => {
                s.not_balanced += 1;
                if r.tait_colorable.is_none() {
                    continue;
                }
                s.with_bridge += usize::from(r.has_bridge);
                for p in &r.forbidden {
                    *s.pattern_counts.get_mut(p.name()).expect("all patterns listed") += 1;
                }
                let non_tait = r.tait_colorable == Some(false);
                s.non_tait += usize::from(non_tait);
                if !r.explained() {
                    s.unexplained.push(r.graph6.clone());
                } else if non_tait && r.precheck.passed() && !r.has_bridge && r.forbidden.is_empty() {
                    s.only_non_tait.push(r.graph6.clone());
                }
            }
        }
    }
    s.all_checks_passed = s.inconsistent.is_empty();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    #[test]
    fn order_six() {
        let c = classify_order(6, SolverConfig::default()).unwrap();
        assert_eq!(c.summary.total, 2);
        assert_eq!(c.summary.balanced, 2);
        assert!(c.summary.all_checks_passed);
        for r in &c.records {
            assert!(r.witness_verified);
            assert_eq!(r.tait_colorable, Some(true));
        }
    }

    #[test]
    fn order_eight_all_fail_precheck() {
        let c = classify_order(8, SolverConfig::default()).unwrap();
        assert_eq!(c.summary.total, 5);
        assert_eq!(c.summary.balanced, 0);
        assert_eq!(c.summary.precheck_failed, 5);
        assert!(c.records.iter().all(|r| r.fast_no && r.reversed_confirms == Some(true)));
    }

    #[test]
    fn isomorphic_inputs_merge() {
        let k33 = Graph::complete_bipartite(3, 3);
        let relabeled = k33.permute(&[5, 0, 3, 1, 4, 2]);
        let c = classify_corpus(&[k33, relabeled, Graph::cycle(4)], SolverConfig::default());
        assert_eq!(c.summary.total, 2);
        let keys: Vec<Graph> = c.records.iter().map(|r| parse_graph6(&r.graph6).unwrap()).collect();
        assert!(keys.iter().any(|g| g.is_cubic()));
        // C4 fails the precheck and is not cubic.
        let c4 = c.records.iter().find(|r| r.n == 4).unwrap();
        assert_eq!(c4.tait_colorable, None);
        assert_eq!(c4.balanced, Balanced::No);
    }

    #[test]
    fn budget_is_flagged() {
        let g = crate::families::gen_petersen(crate::families::PetersenParams::new(9, 1).unwrap());
        let r = classify_graph(&g, SolverConfig::with_budget(1));
        assert_eq!(r.balanced, Balanced::Budget);
        assert!(r.consistent());
        assert_eq!(summarize(&[r]).budget_exhausted, 1);
    }
}
