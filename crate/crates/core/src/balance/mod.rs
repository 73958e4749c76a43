//! Colorings, the 3-balanced and 2-balanced verifiers, necessary order
//! conditions, color-class statistics and the exact solver.

mod solver;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::Z3;

pub use solver::{solve_2_balanced, solve_3_balanced, SolveOutcome, SolverConfig, DEFAULT_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BalanceError {
    #[error("coloring has {found} labels but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("signed label {0} is not +1 or -1")]
    BadSign(i8),
}

/// A vertex coloring `V -> Z3`, serialized as a JSON array of 0/1/2 indexed
/// by vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<Z3>);

impl Coloring {
    pub fn new(labels: Vec<Z3>) -> Coloring {
        Coloring(labels)
    }

    /// Builds a coloring from integers, reducing each mod 3.
    pub fn from_values<I: IntoIterator<Item = i64>>(values: I) -> Coloring {
        Coloring(values.into_iter().map(Z3::from_i64).collect())
    }

    pub fn constant(n: usize, c: Z3) -> Coloring {
        Coloring(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Z3] {
        &self.0
    }

    pub fn into_labels(self) -> Vec<Z3> {
        self.0
    }

    pub fn get(&self, v: usize) -> Z3 {
        self.0[v]
    }

    /// The coloring `eps * c + shift` with `eps = -1` when `negate`.
    pub fn transform(&self, negate: bool, shift: Z3) -> Coloring {
        Coloring(
            self.0
                .iter()
                .map(|&c| if negate { -c } else { c } + shift)
                .collect(),
        )
    }

    pub fn as_bytes(&self) -> Vec<u8> {
        self.0.iter().map(|c| c.value()).collect()
    }
}

impl std::ops::Index<usize> for Coloring {
    type Output = Z3;
    fn index(&self, v: usize) -> &Z3 {
        &self.0[v]
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// A ±1 vertex labeling for 2-balanced work.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct SignedColoring(Vec<i8>);

impl SignedColoring {
    pub fn new(signs: Vec<i8>) -> Result<SignedColoring, BalanceError> {
        if let Some(&s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(BalanceError::BadSign(s));
        }
        Ok(SignedColoring(signs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn get(&self, v: usize) -> i8 {
        self.0[v]
    }
}

impl TryFrom<Vec<i8>> for SignedColoring {
    type Error = BalanceError;
    fn try_from(v: Vec<i8>) -> Result<Self, Self::Error> {
        SignedColoring::new(v)
    }
}

impl From<SignedColoring> for Vec<i8> {
    fn from(c: SignedColoring) -> Vec<i8> {
        c.0
    }
}

fn check_len(g: &Graph, len: usize) -> Result<(), BalanceError> {
    if g.n() == len {
        Ok(())
    } else {
        Err(BalanceError::LengthMismatch {
            expected: g.n(),
            found: len,
        })
    }
}

/// True iff every open neighborhood holds equally many vertices of each
/// color.
pub fn is_3_balanced(g: &Graph, c: &Coloring) -> Result<bool, BalanceError> {
    check_len(g, c.len())?;
    Ok((0..g.n()).all(|v| {
        let mut counts = [0usize; 3];
        for &w in g.neighbors(v) {
            counts[c[w].index()] += 1;
        }
        counts[0] == counts[1] && counts[1] == counts[2]
    }))
}

/// True iff every open neighborhood sums to zero under the ±1 labels.
pub fn is_2_balanced(g: &Graph, c: &SignedColoring) -> Result<bool, BalanceError> {
    check_len(g, c.len())?;
    Ok((0..g.n()).all(|v| g.neighbors(v).iter().map(|&w| c.get(w) as i64).sum::<i64>() == 0))
}

/// The first violated necessary condition for a 3-balanced coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum PrecheckFailure {
    /// Some vertex degree is not a multiple of 3.
    DegreeNotDivisibleBy3 { vertex: usize, degree: usize },
    /// The edge count is not a multiple of 9.
    EdgeCountNotDivisibleBy9 { edges: usize },
    /// An `r`-regular graph (`r > 0`) needs `3 | r`, `3 | n` and `2 | r n`.
    RegularOrder { degree: usize, n: usize },
}

impl fmt::Display for PrecheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrecheckFailure::DegreeNotDivisibleBy3 { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, not divisible by 3")
            }
            PrecheckFailure::EdgeCountNotDivisibleBy9 { edges } => {
                write!(f, "{edges} edges, not divisible by 9")
            }
            PrecheckFailure::RegularOrder { degree, n } => {
                write!(f, "{degree}-regular on {n} vertices violates the regular order constraints")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Precheck {
    Pass,
    Fail(PrecheckFailure),
}

impl Precheck {
    pub fn passed(&self) -> bool {
        matches!(self, Precheck::Pass)
    }
}

/// Necessary order conditions. `Pass` does not imply a coloring exists.
pub fn order_precheck(g: &Graph) -> Precheck {
    if let Some((vertex, degree)) = g.degrees().enumerate().find(|&(_, d)| d % 3 != 0) {
        return Precheck::Fail(PrecheckFailure::DegreeNotDivisibleBy3 { vertex, degree });
    }
    if !g.edge_count().is_multiple_of(9) {
        return Precheck::Fail(PrecheckFailure::EdgeCountNotDivisibleBy9 {
            edges: g.edge_count(),
        });
    }
    // Edgeless graphs are 0-regular and always balanced; the regular
    // constraints only bind for positive degree.
    if let Some(r) = g.regular_degree().filter(|&r| r > 0) {
        let n = g.n();
        if r % 3 != 0 || !n.is_multiple_of(3) || !(r * n).is_multiple_of(2) {
            return Precheck::Fail(PrecheckFailure::RegularOrder { degree: r, n });
        }
    }
    Precheck::Pass
}

/// Vertex and edge color-class sizes of a coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorClassStats {
    /// `|V_0|, |V_1|, |V_2|`.
    pub vertex_class_sizes: [usize; 3],
    /// Symmetric matrix; entry `[i][j]` is `|E_ij|`, the edges whose endpoint
    /// colors are `{i, j}`.
    pub edge_class_sizes: [[usize; 3]; 3],
}

impl ColorClassStats {
    pub fn edge(&self, i: Z3, j: Z3) -> usize {
        self.edge_class_sizes[i.index()][j.index()]
    }

    /// Sum over the six unordered pairs.
    pub fn total_edges(&self) -> usize {
        (0..3)
            .flat_map(|i| (i..3).map(move |j| (i, j)))
            .map(|(i, j)| self.edge_class_sizes[i][j])
            .sum()
    }
}

pub fn stats(g: &Graph, c: &Coloring) -> Result<ColorClassStats, BalanceError> {
    check_len(g, c.len())?;
    let mut vertex_class_sizes = [0usize; 3];
    for &l in c.labels() {
        vertex_class_sizes[l.index()] += 1;
    }
    let mut edge_class_sizes = [[0usize; 3]; 3];
    for e in g.edges() {
        let (a, b) = (c[e.u].index(), c[e.v].index());
        edge_class_sizes[a][b] += 1;
        if a != b {
            edge_class_sizes[b][a] += 1;
        }
    }
    Ok(ColorClassStats {
        vertex_class_sizes,
        edge_class_sizes,
    })
}

/// The lexicographically least member of `{eps * c + i0}`.
pub fn normalize_coloring(c: &Coloring) -> Coloring {
    [false, true]
        .into_iter()
        .flat_map(|neg| Z3::ALL.into_iter().map(move |s| (neg, s)))
        .map(|(neg, s)| c.transform(neg, s))
        .min()
        .expect("six transforms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    pub(crate) fn hex_prism() -> Graph {
        let mut edges = Vec::new();
        for i in 0..6 {
            edges.push((i, (i + 1) % 6));
            edges.push((6 + i, 6 + (i + 1) % 6));
            edges.push((i, i + 6));
        }
        Graph::from_edges(12, edges).unwrap()
    }

    fn fig1_coloring() -> Coloring {
        let ring = [1, 0, 2, 1, 0, 2];
        Coloring::from_values(ring.iter().chain(ring.iter()).copied())
    }

    /// Two prisms sharing one vertex; vertex 0 is the shared one.
    fn fig5() -> (Graph, Coloring) {
        // Gadget on local vertices v1..v6 = 0..5 with v1 shared.
        let gadget = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 5), (2, 4)];
        let mut edges: Vec<(usize, usize)> = gadget.to_vec();
        let map = |x: usize| if x == 0 { 0 } else { x + 5 };
        edges.extend(gadget.iter().map(|&(a, b)| (map(a), map(b))));
        let g = Graph::from_edges(11, edges).unwrap();
        // Figure labels 3,1,1,3,2,2 with 3 read as 0.
        let local = [0, 1, 1, 0, 2, 2];
        let mut labels = local.to_vec();
        labels.extend_from_slice(&local[1..]);
        (g, Coloring::from_values(labels))
    }

    #[test]
    fn fig1_is_balanced() {
        assert!(is_3_balanced(&hex_prism(), &fig1_coloring()).unwrap());
    }

    #[test]
    fn isolated_vertex() {
        for c in Z3::ALL {
            assert!(is_3_balanced(&Graph::empty(1), &Coloring::constant(1, c)).unwrap());
        }
    }

    #[test]
    fn triangle_never_balanced() {
        let c = Coloring::from_values([0, 1, 2]);
        assert!(!is_3_balanced(&Graph::cycle(3), &c).unwrap());
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            is_3_balanced(&Graph::cycle(3), &Coloring::from_values([0, 1])),
            Err(BalanceError::LengthMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn two_balanced_cycle() {
        let c4 = Graph::cycle(4);
        assert!(is_2_balanced(&c4, &SignedColoring::new(vec![1, 1, -1, -1]).unwrap()).unwrap());
        assert!(!is_2_balanced(&c4, &SignedColoring::new(vec![1, -1, 1, -1]).unwrap()).unwrap());
        assert!(SignedColoring::new(vec![1, 0]).is_err());
    }

    #[test]
    fn two_balanced_odd_degree() {
        // K4 is cubic: 16 sign patterns, none balanced.
        let k4 = Graph::complete(4);
        for mask in 0..16u32 {
            let signs = (0..4).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            assert!(!is_2_balanced(&k4, &SignedColoring::new(signs).unwrap()).unwrap());
        }
    }

    #[test]
    fn precheck_examples() {
        assert_eq!(
            order_precheck(&Graph::complete(4)),
            Precheck::Fail(PrecheckFailure::EdgeCountNotDivisibleBy9 { edges: 6 })
        );
        let petersen = Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5 + i), (5 + i, 5 + (i + 2) % 5)]),
        )
        .unwrap();
        assert!(matches!(
            order_precheck(&petersen),
            Precheck::Fail(PrecheckFailure::EdgeCountNotDivisibleBy9 { edges: 15 })
        ));
        assert_eq!(order_precheck(&hex_prism()), Precheck::Pass);
        assert_eq!(order_precheck(&Graph::empty(1)), Precheck::Pass);
        assert!(matches!(
            order_precheck(&Graph::cycle(5)),
            Precheck::Fail(PrecheckFailure::DegreeNotDivisibleBy3 { vertex: 0, degree: 2 })
        ));
    }

    #[test]
    fn stats_of_fig1() {
        let s = stats(&hex_prism(), &fig1_coloring()).unwrap();
        assert_eq!(s.vertex_class_sizes, [4, 4, 4]);
        for i in Z3::ALL {
            for j in Z3::ALL {
                assert_eq!(s.edge(i, j), if i == j { 2 } else { 4 });
            }
        }
        assert_eq!(s.total_edges(), 18);
    }

    #[test]
    fn stats_of_empty() {
        let s = stats(&Graph::empty(3), &Coloring::from_values([0, 1, 2])).unwrap();
        assert_eq!(s.vertex_class_sizes, [1, 1, 1]);
        assert_eq!(s.total_edges(), 0);
    }

    #[test]
    fn fig5_non_equidistributed() {
        let (g, c) = fig5();
        assert!(is_3_balanced(&g, &c).unwrap());
        assert_eq!(stats(&g, &c).unwrap().vertex_class_sizes, [3, 4, 4]);
    }

    #[test]
    fn normalization() {
        let f = |v: &[i64]| Coloring::from_values(v.iter().copied());
        assert_eq!(normalize_coloring(&f(&[0, 1, 2])), f(&[0, 1, 2]));
        assert_eq!(normalize_coloring(&f(&[2, 1, 0])), f(&[0, 1, 2]));
        assert_eq!(normalize_coloring(&f(&[1, 1, 1])), f(&[0, 0, 0]));
        let c = f(&[2, 0, 1, 1]);
        let n = normalize_coloring(&c);
        assert_eq!(normalize_coloring(&n), n);
    }

    #[test]
    fn json_shape() {
        let c = fig1_coloring();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, "[1,0,2,1,0,2,1,0,2,1,0,2]");
        assert_eq!(serde_json::from_str::<Coloring>(&s).unwrap(), c);
        let signed: SignedColoring = serde_json::from_str("[1,-1]").unwrap();
        assert_eq!(signed.signs(), &[1, -1]);
        assert!(serde_json::from_str::<SignedColoring>("[2]").is_err());
    }
}
