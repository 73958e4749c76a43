//! Immutable simple undirected graphs and the structural queries the rest of
//! the crate builds on.
//!
//! A [`Graph`] keeps a sorted neighbor list per vertex. Graphs with at most 64
//! vertices additionally carry one `u64` neighbor bitset per vertex, which the
//! subgraph search and canonical labeling use for constant-time adjacency.

mod canon;
mod graph6;
mod structure;
mod subgraph;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_form, canonical_form_colored, CanonicalForm, CANON_MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, read_graph6_lines};
pub use structure::{bridges, connected_components, is_connected};
pub use subgraph::{find_subgraph_monomorphism, subgraph_monomorphism_exists};

/// Largest vertex count for which adjacency bitsets are kept.
pub const BITSET_MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0},{0}) is a loop")]
    LoopEdge(usize),
    #[error("edge ({0},{1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 payload truncated: expected {expected} data bytes, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("graph has {n} vertices, canonical labeling supports at most {max}")]
    SizeLimitExceeded { n: usize, max: usize },
}

/// An undirected edge with endpoints stored in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId {
    pub u: usize,
    pub v: usize,
}

impl EdgeId {
    /// Builds the edge `{a, b}`. Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> EdgeId {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            EdgeId { u: a, v: b }
        } else {
            EdgeId { u: b, v: a }
        }
    }

    /// The endpoint opposite to `x`.
    pub fn other(self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    bits: Option<Vec<u64>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, duplicates and out-of-range
    /// endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Graph::from_sorted_adjacency(adj))
    }

    /// Like [`Graph::from_edges`] but merges repeated edges instead of
    /// rejecting them. Loops and range errors are still reported.
    pub fn from_edges_merged<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph::from_sorted_adjacency(adj))
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let bits = (n <= BITSET_MAX_VERTICES).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
                .collect()
        });
        Graph {
            adj,
            bits,
            edge_count,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_adjacency(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|x| (0..b).map(move |y| (x, a + y)));
        Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// The common degree if the graph is regular. The graph on zero vertices
    /// counts as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degs = self.degrees();
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_cubic(&self) -> bool {
        self.n() > 0 && self.regular_degree() == Some(3)
    }

    /// Neighbor bitset of `v`, available when `n <= 64`.
    pub fn neighbor_bits(&self, v: usize) -> Option<u64> {
        self.bits.as_ref().map(|b| b[v])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        match &self.bits {
            Some(bits) => bits[a] >> b & 1 == 1,
            None => self.adj[a].binary_search(&b).is_ok(),
        }
    }

    /// All edges in increasing `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| EdgeId { u, v })
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().map(|e| (e.u, e.v)).collect()
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let edges = self.edges().map(|e| (perm[e.u], perm[e.v]));
        Graph::from_edges(self.n(), edges).expect("a permutation preserves simplicity")
    }

    /// The graph with the given edge removed (no-op if absent).
    pub fn without_edge(&self, e: EdgeId) -> Graph {
        let edges = self.edges().filter(|&f| f != e).map(|f| (f.u, f.v));
        Graph::from_edges(self.n(), edges).expect("a subgraph stays simple")
    }

    /// The graph with the given edge added.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n(), self.edges().map(|f| (f.u, f.v)).chain([(a, b)]))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges()
            .map(|e| (e.u, e.v))
            .chain(other.edges().map(|e| (e.u + off, e.v + off)));
        Graph::from_edges(off + other.n(), edges).expect("disjoint union is simple")
    }

    /// The subgraph induced on `verts`, relabelled `0..verts.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v]));
        Graph::from_edges(verts.len(), edges).expect("induced subgraph is simple")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_list())
            .finish()
    }
}
