//! Named graph families and constructions, with the explicit colorings that
//! make them 3-balanced.
//!
//! Vertex layouts:
//! - generalized Petersen `G(m, j)`: exterior `v_i -> i`, interior
//!   `u_i -> m + i`;
//! - generalized Pappus `P(m, j, k)`: `v_i -> i`, `u_i -> m + i`,
//!   `w_i -> 2m + i`;
//! - Möbius ladder `M_n`: rim `0..n`, rungs `i -- i + n/2`;
//! - products: pair `(u, v) -> u * n2 + v`;
//! - join along a base graph: the parts' vertices concatenated in base vertex
//!   order;
//! - gluing at a vertex: the shared vertex is `0`, then the remaining vertices
//!   of each input in order.
//!
//! Index arithmetic on the rings is mod `m`.

mod constructions;
mod products;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::balance::Coloring;
use crate::graph::{EdgeId, Graph};

pub use constructions::{
    edge_disjoint_union_check, glue_at_vertex, glue_colorings, join, join_along, join_coloring,
    thirds_coloring, Glued,
};
pub use products::{product, product_coloring, ProductKind, ProductLabels};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no explicit coloring: {0}")]
    NotApplicable(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("edge {0} occurs in more than one graph")]
    EdgesOverlap(EdgeId),
    #[error("graphs must share one vertex set: expected {expected} vertices, found {found}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("expected {expected} parts (one per base vertex), found {found}")]
    PartCountMismatch { expected: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PetersenParams {
    m: usize,
    j: usize,
}

impl PetersenParams {
    /// Requires `m >= 5` and `1 <= j < m/2`.
    pub fn new(m: usize, j: usize) -> Result<Self, FamilyError> {
        if m < 5 || j < 1 || 2 * j >= m {
            return Err(FamilyError::BadParams(format!(
                "G({m},{j}) needs m >= 5 and 1 <= j < m/2"
            )));
        }
        Ok(PetersenParams { m, j })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Every valid parameter pair with `m` in the given range.
    pub fn all(ms: impl IntoIterator<Item = usize>) -> Vec<PetersenParams> {
        ms.into_iter()
            .filter(|&m| m >= 5)
            .flat_map(|m| (1..).take_while(move |&j| 2 * j < m).map(move |j| PetersenParams { m, j }))
            .collect()
    }

    /// Whether the classification predicts a 3-balanced coloring:
    /// `3 | m` and `3 ∤ j`.
    pub fn predicted_balanced(&self) -> bool {
        self.m.is_multiple_of(3) && !self.j.is_multiple_of(3)
    }
}

pub fn gen_petersen(p: PetersenParams) -> Graph {
    let PetersenParams { m, j } = p;
    let edges = (0..m).flat_map(|i| [(i, (i + 1) % m), (i, m + i), (m + i, m + (i + j) % m)]);
    Graph::from_edges(2 * m, edges).expect("j < m/2 keeps G(m,j) simple")
}

/// `l(v_i) = l(u_i) = i mod 3`, defined when `3 | m` and `3 ∤ j`.
pub fn petersen_coloring(p: PetersenParams) -> Result<Coloring, FamilyError> {
    if !p.predicted_balanced() {
        return Err(FamilyError::NotApplicable(format!(
            "G({},{}) needs 3 | m and 3 ∤ j",
            p.m, p.j
        )));
    }
    Ok(Coloring::from_values((0..2 * p.m).map(|x| (x % p.m) as i64)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PappusParams {
    m: usize,
    j: usize,
    k: usize,
}

impl PappusParams {
    /// Requires `m >= 4`, `1 <= j < m/2` and `1 <= k <= m/2`.
    pub fn new(m: usize, j: usize, k: usize) -> Result<Self, FamilyError> {
        if m < 4 || j < 1 || 2 * j >= m || k < 1 || 2 * k > m {
            return Err(FamilyError::BadParams(format!(
                "P({m},{j},{k}) needs m >= 4, 1 <= j < m/2 and 1 <= k <= m/2"
            )));
        }
        Ok(PappusParams { m, j, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn all(ms: impl IntoIterator<Item = usize>) -> Vec<PappusParams> {
        ms.into_iter()
            .filter(|&m| m >= 4)
            .flat_map(|m| {
                (1..)
                    .take_while(move |&j| 2 * j < m)
                    .flat_map(move |j| (1..=m / 2).map(move |k| PappusParams { m, j, k }))
            })
            .collect()
    }

    pub fn is_cubic(&self) -> bool {
        2 * self.k == self.m
    }

    /// `6 | m`, `3 ∤ j` and `k = m/2`.
    pub fn predicted_balanced(&self) -> bool {
        self.m.is_multiple_of(6) && !self.j.is_multiple_of(3) && self.is_cubic()
    }
}

pub fn gen_pappus(p: PappusParams) -> Graph {
    let PappusParams { m, j, k } = p;
    let (u, w) = (m, 2 * m);
    let edges = (0..m).flat_map(|i| {
        [
            (i, (i + 1) % m),
            (i, u + i),
            (u + i, w + (i + j) % m),
            (u + i, w + (i + m - j) % m),
            (w + i, w + (i + k) % m),
        ]
    });
    // With k = m/2 each rung w_i w_{i+k} is listed from both ends.
    Graph::from_edges_merged(3 * m, edges).expect("P(m,j,k) has no loops")
}

/// `l(v_i) = l(u_i) = l(w_i) = i mod 3`, defined when `6 | m`, `3 ∤ j`,
/// `k = m/2`.
pub fn pappus_coloring(p: PappusParams) -> Result<Coloring, FamilyError> {
    if !p.predicted_balanced() {
        return Err(FamilyError::NotApplicable(format!(
            "P({},{},{}) needs 6 | m, 3 ∤ j and k = m/2",
            p.m, p.j, p.k
        )));
    }
    Ok(Coloring::from_values((0..3 * p.m).map(|x| (x % p.m) as i64)))
}

/// The `n`-cycle with antipodal chords. Requires even `n >= 4`.
pub fn mobius_ladder(n: usize) -> Result<Graph, FamilyError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(FamilyError::BadParams(format!(
            "M_{n} needs an even n >= 4"
        )));
    }
    let rim = (0..n).map(|i| (i, (i + 1) % n));
    let rungs = (0..n / 2).map(|i| (i, i + n / 2));
    Ok(Graph::from_edges(n, rim.chain(rungs)).expect("M_n is simple for n >= 4"))
}

/// `l(v_i) = i mod 3`, defined when `6 | n`.
pub fn mobius_coloring(n: usize) -> Result<Coloring, FamilyError> {
    mobius_ladder(n)?;
    if !n.is_multiple_of(6) {
        return Err(FamilyError::NotApplicable(format!("M_{n} needs 6 | n")));
    }
    Ok(Coloring::from_values((0..n).map(|i| i as i64)))
}
