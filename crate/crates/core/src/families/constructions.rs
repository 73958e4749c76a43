use std::collections::BTreeSet;

use super::FamilyError;
use crate::balance::{is_3_balanced, Coloring};
use crate::graph::{EdgeId, Graph};
use crate::Z3;

/// The join of `parts` along `base`: disjoint copies of the parts, plus every
/// edge between the parts placed at adjacent base vertices.
pub fn join_along(base: &Graph, parts: &[Graph]) -> Result<Graph, FamilyError> {
    if parts.len() != base.n() {
        return Err(FamilyError::PartCountMismatch {
            expected: base.n(),
            found: parts.len(),
        });
    }
    let mut offset = Vec::with_capacity(parts.len());
    let mut total = 0;
    for p in parts {
        offset.push(total);
        total += p.n();
    }
    let mut edges = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        edges.extend(p.edges().map(|e| (offset[i] + e.u, offset[i] + e.v)));
    }
    for e in base.edges() {
        for a in 0..parts[e.u].n() {
            for b in 0..parts[e.v].n() {
                edges.push((offset[e.u] + a, offset[e.v] + b));
            }
        }
    }
    Ok(Graph::from_edges(total, edges).expect("join edges are distinct"))
}

/// `g1 + g2`: the join along a single edge.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    join_along(&Graph::complete(2), &[g1.clone(), g2.clone()]).expect("two parts for K2")
}

/// Concatenates part colorings in the vertex layout of [`join_along`].
pub fn join_coloring(parts: &[Coloring]) -> Coloring {
    Coloring::new(parts.iter().flat_map(|c| c.labels().iter().copied()).collect())
}

/// A coloring of `n` vertices using each color on exactly `n/3` of them
/// (`i -> i mod 3`). Any such coloring makes every part of a join see a
/// balanced neighborhood across the join.
pub fn thirds_coloring(n: usize) -> Result<Coloring, FamilyError> {
    if !n.is_multiple_of(3) {
        return Err(FamilyError::NotApplicable(format!(
            "{n} vertices cannot be split into equal thirds"
        )));
    }
    Ok(Coloring::from_values((0..n).map(|i| i as i64)))
}

/// Result of [`glue_at_vertex`]: the glued graph and, for each input, where
/// its vertices landed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub graph: Graph,
    /// `maps[i][v]` is the image of vertex `v` of input `i`.
    pub maps: Vec<Vec<usize>>,
}

/// Identifies the chosen vertex of every input into one shared vertex `0`;
/// the other vertices follow input by input in their original order.
pub fn glue_at_vertex(inputs: &[(Graph, usize)]) -> Result<Glued, FamilyError> {
    let mut next = 1;
    let mut maps = Vec::with_capacity(inputs.len());
    for (g, root) in inputs {
        if *root >= g.n() {
            return Err(FamilyError::BadParams(format!(
                "vertex {root} is outside a graph on {} vertices",
                g.n()
            )));
        }
        let map: Vec<usize> = (0..g.n())
            .map(|v| {
                if v == *root {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        maps.push(map);
    }
    let edges: Vec<(usize, usize)> = inputs
        .iter()
        .zip(&maps)
        .flat_map(|((g, _), map)| g.edges().map(move |e| (map[e.u], map[e.v])))
        .collect();
    let graph = Graph::from_edges(next, edges).expect("glued inputs only share a vertex");
    Ok(Glued { graph, maps })
}

/// Shifts each input coloring so its glue vertex gets color 0 and merges
/// them. Each coloring must be 3-balanced on its input graph.
pub fn glue_colorings(
    inputs: &[(Graph, usize)],
    glued: &Glued,
    colorings: &[Coloring],
) -> Result<Coloring, FamilyError> {
    if colorings.len() != inputs.len() {
        return Err(FamilyError::PartCountMismatch {
            expected: inputs.len(),
            found: colorings.len(),
        });
    }
    let mut labels = vec![Z3::ZERO; glued.graph.n()];
    for (((g, root), map), c) in inputs.iter().zip(&glued.maps).zip(colorings) {
        if !is_3_balanced(g, c).unwrap_or(false) {
            return Err(FamilyError::HypothesisViolated(
                "every glued coloring must be 3-balanced on its graph".into(),
            ));
        }
        let shift = -c[*root];
        for v in 0..g.n() {
            labels[map[v]] = c[v] + shift;
        }
    }
    Ok(Coloring::new(labels))
}

/// For graphs on one vertex set: whether their edge sets are pairwise
/// disjoint and the coloring balances every one of them. When it returns
/// true the coloring also balances the union.
pub fn edge_disjoint_union_check(
    graphs: &[Graph],
    coloring: &Coloring,
) -> Result<bool, FamilyError> {
    let n = coloring.len();
    let mut seen = BTreeSet::<EdgeId>::new();
    for g in graphs {
        if g.n() != n {
            return Err(FamilyError::VertexCountMismatch {
                expected: n,
                found: g.n(),
            });
        }
        for e in g.edges() {
            if !seen.insert(e) {
                return Err(FamilyError::EdgesOverlap(e));
            }
        }
    }
    Ok(graphs
        .iter()
        .all(|g| is_3_balanced(g, coloring).expect("lengths checked")))
}
