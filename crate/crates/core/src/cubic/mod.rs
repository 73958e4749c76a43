//! Cubic graphs: induced edge colorings, Tait colorings and their perfect
//! matchings, the alternating-sum characterization, the dataset bijection and
//! forbidden-subgraph scanning.

mod cycles;
mod dataset;
mod forbidden;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::balance::Coloring;
use crate::graph::{EdgeId, Graph};
use crate::Z3;

pub use cycles::{
    alternating_sum, check_sum_characterization, enumerate_cycles, reconstruct_vertex_coloring,
    CYCLE_ENUMERATION_MAX_VERTICES,
};
pub use dataset::{dataset_from_colored_graph, graph_from_dataset, CubicDataset};
pub use forbidden::{forbidden_scan, ForbiddenPattern, ForbiddenScan};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubicError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("coloring has {found} labels, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge coloring does not label edge {0}")]
    MissingEdge(EdgeId),
    #[error("edge coloring is not a Tait coloring")]
    NotTait,
    #[error("edge coloring does not split the edges into 3 perfect matchings")]
    NotThreeMatchings,
    #[error("alternating cycles need two distinct colors, got {0} twice")]
    SameColors(Z3),
    #[error("cycle enumeration is limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("edge coloring is not induced by any vertex coloring")]
    CharacterizationFails,
    #[error("coloring is not 3-balanced")]
    NotBalanced,
    #[error("invalid dataset: {0}")]
    InvalidDataset(String),
}

/// A `Z3` label on each edge.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<LabeledEdge>", from = "Vec<LabeledEdge>")]
pub struct EdgeColoring {
    labels: BTreeMap<EdgeId, Z3>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
struct LabeledEdge {
    u: usize,
    v: usize,
    label: Z3,
}

impl From<EdgeColoring> for Vec<LabeledEdge> {
    fn from(ec: EdgeColoring) -> Self {
        ec.labels
            .into_iter()
            .map(|(e, label)| LabeledEdge { u: e.u, v: e.v, label })
            .collect()
    }
}

impl From<Vec<LabeledEdge>> for EdgeColoring {
    fn from(edges: Vec<LabeledEdge>) -> Self {
        edges.into_iter().map(|e| (EdgeId::new(e.u, e.v), e.label)).collect()
    }
}

impl FromIterator<(EdgeId, Z3)> for EdgeColoring {
    fn from_iter<I: IntoIterator<Item = (EdgeId, Z3)>>(iter: I) -> Self {
        EdgeColoring {
            labels: iter.into_iter().collect(),
        }
    }
}

impl EdgeColoring {
    pub fn new(labels: BTreeMap<EdgeId, Z3>) -> Self {
        EdgeColoring { labels }
    }

    /// Labels the edges of `g` in [`Graph::edges`] order.
    pub fn from_labels(g: &Graph, labels: &[Z3]) -> Self {
        assert_eq!(labels.len(), g.edge_count(), "one label per edge");
        g.edges().zip(labels.iter().copied()).collect()
    }

    pub fn get(&self, u: usize, v: usize) -> Option<Z3> {
        if u == v {
            return None;
        }
        self.labels.get(&EdgeId::new(u, v)).copied()
    }

    pub fn set(&mut self, e: EdgeId, label: Z3) {
        self.labels.insert(e, label);
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Z3)> + '_ {
        self.labels.iter().map(|(&e, &c)| (e, c))
    }

    /// Whether every edge of `g`, and nothing else, is labelled.
    pub fn covers(&self, g: &Graph) -> bool {
        self.labels.len() == g.edge_count() && g.edges().all(|e| self.labels.contains_key(&e))
    }

    fn label(&self, u: usize, v: usize) -> Result<Z3, CubicError> {
        self.get(u, v).ok_or(CubicError::MissingEdge(EdgeId::new(u, v)))
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.labels.iter().map(|(e, c)| (e.to_string(), c.value()))).finish()
    }
}

fn require_cubic(g: &Graph) -> Result<(), CubicError> {
    if g.is_cubic() {
        Ok(())
    } else {
        Err(CubicError::NotCubic)
    }
}

/// `l(uv) = l(u) + l(v)`.
pub fn induced_edge_coloring(g: &Graph, c: &Coloring) -> Result<EdgeColoring, CubicError> {
    require_cubic(g)?;
    if c.len() != g.n() {
        return Err(CubicError::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    Ok(g.edges().map(|e| (e, c[e.u] + c[e.v])).collect())
}

/// Whether `ec` labels every edge of the cubic graph `g` and the three edges
/// at each vertex carry distinct labels.
pub fn is_tait(g: &Graph, ec: &EdgeColoring) -> bool {
    g.is_cubic()
        && ec.covers(g)
        && (0..g.n()).all(|v| {
            let mut seen = [false; 3];
            g.neighbors(v).iter().all(|&w| {
                let c = ec.get(v, w).expect("covered").index();
                !std::mem::replace(&mut seen[c], true)
            })
        })
}

/// The three color classes of a Tait coloring, each a perfect matching.
pub fn matchings_from_edge_coloring(
    g: &Graph,
    ec: &EdgeColoring,
) -> Result<[Vec<EdgeId>; 3], CubicError> {
    require_cubic(g)?;
    if !is_tait(g, ec) {
        return Err(CubicError::NotTait);
    }
    let mut classes: [Vec<EdgeId>; 3] = Default::default();
    for (e, c) in ec.iter() {
        classes[c.index()].push(e);
    }
    Ok(classes)
}

/// The cycles formed by the edges colored `i` or `j`. They partition the
/// vertex set, alternate between the two colors and so have even length.
/// Each cycle starts at its least vertex and continues along the color-`i`
/// edge.
pub fn alternating_cycle_cover(
    g: &Graph,
    ec: &EdgeColoring,
    i: Z3,
    j: Z3,
) -> Result<Vec<Vec<usize>>, CubicError> {
    if i == j {
        return Err(CubicError::SameColors(i));
    }
    require_cubic(g)?;
    if !is_tait(g, ec) {
        return Err(CubicError::NotTait);
    }
    let step = |v: usize, c: Z3| -> usize {
        *g.neighbors(v)
            .iter()
            .find(|&&w| ec.get(v, w) == Some(c))
            .expect("Tait colorings use every color at every vertex")
    };
    let mut seen = vec![false; g.n()];
    let mut cycles = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut cycle = vec![s];
        seen[s] = true;
        let (mut v, mut c) = (step(s, i), j);
        while v != s {
            seen[v] = true;
            cycle.push(v);
            v = step(v, c);
            c = if c == i { j } else { i };
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Some Tait coloring of `g`, by backtracking over edges in BFS order; `None`
/// when `g` has none (for instance, a snark).
pub fn find_tait_coloring(g: &Graph) -> Result<Option<EdgeColoring>, CubicError> {
    require_cubic(g)?;
    let edges = g.edge_list();
    let index: BTreeMap<EdgeId, usize> = g.edges().enumerate().map(|(k, e)| (e, k)).collect();
    // Order edges so each one meets an earlier edge where possible.
    let mut order = Vec::with_capacity(edges.len());
    let mut placed = vec![false; edges.len()];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..g.n() {
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let k = index[&EdgeId::new(v, w)];
                if !placed[k] {
                    placed[k] = true;
                    order.push(k);
                    queue.push_back(w);
                }
            }
        }
    }
    // used[v]: bitmask of colors already on edges at v.
    let mut used = vec![0u8; g.n()];
    let mut color = vec![0u8; edges.len()];
    fn go(d: usize, order: &[usize], edges: &[(usize, usize)], used: &mut [u8], color: &mut [u8]) -> bool {
        let Some(&k) = order.get(d) else {
            return true;
        };
        let (u, v) = edges[k];
        // The first edge may take color 0 without loss of generality.
        let range = if d == 0 { 0..1 } else { 0..3 };
        for c in range {
            let bit = 1 << c;
            if used[u] & bit != 0 || used[v] & bit != 0 {
                continue;
            }
            used[u] |= bit;
            used[v] |= bit;
            color[k] = c;
            if go(d + 1, order, edges, used, color) {
                return true;
            }
            used[u] &= !bit;
            used[v] &= !bit;
        }
        false
    }
    if !go(0, &order, &edges, &mut used, &mut color) {
        return Ok(None);
    }
    let labels: Vec<Z3> = color.into_iter().map(Z3::new).collect();
    Ok(Some(EdgeColoring::from_labels(g, &labels)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::{is_3_balanced, solve_3_balanced, SolverConfig};

    pub(crate) fn prism() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap()
    }

    pub(crate) fn hex_prism() -> (Graph, Coloring) {
        let mut edges = Vec::new();
        for i in 0..6 {
            edges.push((i, (i + 1) % 6));
            edges.push((6 + i, 6 + (i + 1) % 6));
            edges.push((i, i + 6));
        }
        let g = Graph::from_edges(12, edges).unwrap();
        let c = Coloring::from_values([1, 0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 2]);
        (g, c)
    }

    pub(crate) fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn induced_single_edge_label() {
        let g = Graph::complete(4);
        let c = Coloring::from_values([1, 2, 0, 0]);
        let ec = induced_edge_coloring(&g, &c).unwrap();
        assert_eq!(ec.get(0, 1), Some(Z3::ZERO));
        assert_eq!(ec.get(1, 0), Some(Z3::ZERO));
    }

    #[test]
    fn hex_prism_induced_is_tait() {
        let (g, c) = hex_prism();
        let ec = induced_edge_coloring(&g, &c).unwrap();
        assert!(is_tait(&g, &ec));
        let m = matchings_from_edge_coloring(&g, &ec).unwrap();
        assert!(m.iter().all(|x| x.len() == 6));
    }

    #[test]
    fn constant_coloring_is_not_tait() {
        let g = Graph::complete(4);
        let ec = induced_edge_coloring(&g, &Coloring::constant(4, Z3::ONE)).unwrap();
        assert!(ec.iter().all(|(_, c)| c == Z3::TWO));
        assert!(!is_tait(&g, &ec));
        assert_eq!(matchings_from_edge_coloring(&g, &ec), Err(CubicError::NotTait));
    }

    #[test]
    fn not_cubic_rejected() {
        assert_eq!(
            induced_edge_coloring(&Graph::cycle(4), &Coloring::constant(4, Z3::ZERO)),
            Err(CubicError::NotCubic)
        );
    }

    #[test]
    fn k33_matchings() {
        let g = Graph::complete_bipartite(3, 3);
        let c = solve_3_balanced(&g, SolverConfig::default()).into_coloring().unwrap();
        let ec = induced_edge_coloring(&g, &c).unwrap();
        let m = matchings_from_edge_coloring(&g, &ec).unwrap();
        assert!(m.iter().all(|x| x.len() == 3));
    }

    #[test]
    fn prism_cycle_cover() {
        let (g, c) = hex_prism();
        let ec = induced_edge_coloring(&g, &c).unwrap();
        let cover = alternating_cycle_cover(&g, &ec, Z3::ZERO, Z3::ONE).unwrap();
        let mut all: Vec<usize> = cover.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..12).collect::<Vec<_>>());
        assert!(cover.iter().all(|cy| cy.len() % 2 == 0));
        assert_eq!(
            alternating_cycle_cover(&g, &ec, Z3::ONE, Z3::ONE),
            Err(CubicError::SameColors(Z3::ONE))
        );
    }

    #[test]
    fn petersen_has_no_tait_coloring() {
        assert!(find_tait_coloring(&petersen()).unwrap().is_none());
        // Brute force over all 3^15 edge labelings.
        let g = petersen();
        let edges = g.edge_list();
        let any = (0..3usize.pow(15)).any(|mut code| {
            let mut used = [0u8; 10];
            edges.iter().all(|&(u, v)| {
                let bit = 1 << (code % 3);
                code /= 3;
                let ok = used[u] & bit == 0 && used[v] & bit == 0;
                used[u] |= bit;
                used[v] |= bit;
                ok
            })
        });
        assert!(!any);
        assert!(solve_3_balanced(&g, SolverConfig::default()).is_none());
    }

    #[test]
    fn tait_search_finds_valid_colorings() {
        let (g, _) = hex_prism();
        for h in [g, prism(), Graph::complete(4), Graph::complete_bipartite(3, 3)] {
            let ec = find_tait_coloring(&h).unwrap().unwrap();
            assert!(is_tait(&h, &ec));
        }
    }

    #[test]
    fn json_shape() {
        let g = Graph::complete(4);
        let ec = induced_edge_coloring(&g, &Coloring::from_values([0, 1, 2, 0])).unwrap();
        let s = serde_json::to_string(&ec).unwrap();
        assert!(s.starts_with(r#"[{"u":0,"v":1,"label":1}"#));
        assert_eq!(serde_json::from_str::<EdgeColoring>(&s).unwrap(), ec);
        let (h, c) = hex_prism();
        assert!(is_3_balanced(&h, &c).unwrap());
    }
}
