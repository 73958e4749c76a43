use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::balance::{is_2_balanced, is_3_balanced, Coloring, SignedColoring};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Tensor,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Tensor,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    fn adjacent(self, g1: &Graph, g2: &Graph, (u, v): (usize, usize), (x, y): (usize, usize)) -> bool {
        let (eu, ev) = (u == x, v == y);
        let (au, av) = (g1.has_edge(u, x), g2.has_edge(v, y));
        match self {
            ProductKind::Cartesian => (eu && av) || (ev && au),
            ProductKind::Tensor => au && av,
            ProductKind::Strong => (eu && av) || (ev && au) || (au && av),
            ProductKind::Lexicographic => au || (eu && av),
        }
    }
}

/// The product graph; the pair `(u, v)` becomes vertex `u * g2.n() + v`.
pub fn product(g1: &Graph, g2: &Graph, kind: ProductKind) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let n = n1 * n2;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if kind.adjacent(g1, g2, (a / n2, a % n2), (b / n2, b % n2)) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are listed once")
}

/// Factor labelings from which a product coloring is assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductLabels {
    /// 3-balanced colorings of both factors; the product gets
    /// `l(u, v) = l1(u) + l2(v)`. Applies to the cartesian, tensor and strong
    /// products.
    Sum(Coloring, Coloring),
    /// A 3-balanced coloring of a `3r`-regular `g1` and a 2-balanced ±1
    /// labeling of a `2s`-regular `g2`; the tensor product gets
    /// `l(u, v) = s(v) * l1(u)`.
    Signed(Coloring, SignedColoring),
    /// A 3-balanced coloring of a `3r`-regular `g2`; the lexicographic
    /// product gets `l(u, v) = l2(v)`. `g1` is arbitrary.
    RightProjection(Coloring),
}

/// Builds the product coloring after checking the hypotheses of the rule.
pub fn product_coloring(
    g1: &Graph,
    g2: &Graph,
    kind: ProductKind,
    labels: &ProductLabels,
) -> Result<Coloring, FamilyError> {
    let bad = |msg: &str| Err(FamilyError::HypothesisViolated(msg.to_string()));
    let balanced = |g: &Graph, c: &Coloring| is_3_balanced(g, c).unwrap_or(false);
    let n2 = g2.n();
    let cells = 0..g1.n() * n2;
    match labels {
        ProductLabels::Sum(c1, c2) => {
            if kind == ProductKind::Lexicographic {
                return bad("the sum rule does not apply to the lexicographic product");
            }
            if !balanced(g1, c1) || !balanced(g2, c2) {
                return bad("both factor colorings must be 3-balanced");
            }
            Ok(Coloring::new(cells.map(|x| c1[x / n2] + c2[x % n2]).collect()))
        }
        ProductLabels::Signed(c1, s2) => {
            if kind != ProductKind::Tensor {
                return bad("the signed rule applies to the tensor product only");
            }
            if !matches!(g1.regular_degree(), Some(r) if r > 0 && r % 3 == 0) {
                return bad("the first factor must be 3r-regular with r >= 1");
            }
            if !matches!(g2.regular_degree(), Some(r) if r > 0 && r % 2 == 0) {
                return bad("the second factor must be 2r-regular with r >= 1");
            }
            if !balanced(g1, c1) {
                return bad("the first factor coloring must be 3-balanced");
            }
            if !is_2_balanced(g2, s2).unwrap_or(false) {
                return bad("the second factor labeling must be 2-balanced");
            }
            Ok(Coloring::new(
                cells
                    .map(|x| {
                        let l = c1[x / n2];
                        if s2.get(x % n2) > 0 {
                            l
                        } else {
                            -l
                        }
                    })
                    .collect(),
            ))
        }
        ProductLabels::RightProjection(c2) => {
            if kind != ProductKind::Lexicographic {
                return bad("the projection rule applies to the lexicographic product only");
            }
            if !matches!(g2.regular_degree(), Some(r) if r > 0 && r % 3 == 0) {
                return bad("the second factor must be 3r-regular with r >= 1");
            }
            if !balanced(g2, c2) {
                return bad("the second factor coloring must be 3-balanced");
            }
            Ok(Coloring::new(cells.map(|x| c2[x % n2]).collect()))
        }
    }
}
