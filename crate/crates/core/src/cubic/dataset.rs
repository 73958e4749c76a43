use serde::{Deserialize, Serialize};

use super::{require_cubic, CubicError};
use crate::balance::{is_3_balanced, Coloring};
use crate::graph::Graph;
use crate::Z3;

/// Three equal vertex classes `V_0, V_1, V_2` with bijections
/// `s_ij: V_i -> V_j`, where `s_ji` inverts `s_ij` and `s_ii` has no fixed
/// point.
///
/// `maps[i][j][a] = b` means `s_ij(classes[i][a]) = classes[j][b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicDataset {
    pub classes: [Vec<usize>; 3],
    pub maps: [[Vec<usize>; 3]; 3],
}

impl CubicDataset {
    /// Checks the dataset invariants.
    pub fn validate(&self) -> Result<(), CubicError> {
        let bad = |msg: String| Err(CubicError::InvalidDataset(msg));
        let m = self.classes[0].len();
        if self.classes.iter().any(|c| c.len() != m) {
            return bad("vertex classes differ in size".into());
        }
        let mut all: Vec<usize> = self.classes.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return bad("vertex classes are not disjoint".into());
        }
        for i in 0..3 {
            for j in 0..3 {
                let s = &self.maps[i][j];
                if s.len() != m {
                    return bad(format!("s_{i}{j} has {} entries, expected {m}", s.len()));
                }
                let mut hit = vec![false; m];
                for &b in s {
                    if b >= m || std::mem::replace(&mut hit[b], true) {
                        return bad(format!("s_{i}{j} is not a bijection"));
                    }
                }
                if (0..m).any(|a| self.maps[j][i][s[a]] != a) {
                    return bad(format!("s_{j}{i} does not invert s_{i}{j}"));
                }
                if i == j {
                    if let Some(a) = (0..m).find(|&a| s[a] == a) {
                        return bad(format!("s_{i}{i} fixes {}", self.classes[i][a]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Size of each class.
    pub fn class_size(&self) -> usize {
        self.classes[0].len()
    }
}

/// Splits a 3-balanced cubic graph into its color classes; `s_ij(v)` is the
/// unique neighbor of `v` colored `j`.
pub fn dataset_from_colored_graph(g: &Graph, c: &Coloring) -> Result<CubicDataset, CubicError> {
    require_cubic(g)?;
    if c.len() != g.n() {
        return Err(CubicError::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    if !is_3_balanced(g, c).expect("lengths checked") {
        return Err(CubicError::NotBalanced);
    }
    let mut classes: [Vec<usize>; 3] = Default::default();
    let mut local = vec![0; g.n()];
    for v in 0..g.n() {
        let i = c[v].index();
        local[v] = classes[i].len();
        classes[i].push(v);
    }
    let maps = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            classes[i]
                .iter()
                .map(|&v| {
                    let w = *g.neighbors(v)
                        .iter()
                        .find(|&&w| c[w].index() == j)
                        .expect("balanced cubic vertices see every color once");
                    local[w]
                })
                .collect()
        })
    });
    let d = CubicDataset { classes, maps };
    debug_assert!(d.validate().is_ok());
    Ok(d)
}

/// The cubic 3-balanced graph of a dataset. Vertices are numbered class by
/// class (`V_0` first), in the order listed; `classes[i][a]` becomes
/// `i * m + a` and is colored `i`.
pub fn graph_from_dataset(d: &CubicDataset) -> Result<(Graph, Coloring), CubicError> {
    d.validate()?;
    let m = d.class_size();
    let mut edges = Vec::with_capacity(3 * m * 3 / 2);
    for i in 0..3 {
        for j in i..3 {
            for (a, &b) in d.maps[i][j].iter().enumerate() {
                let (x, y) = (i * m + a, j * m + b);
                if x < y {
                    edges.push((x, y));
                }
            }
        }
    }
    let g = Graph::from_edges(3 * m, edges).expect("valid datasets give simple graphs");
    let c = Coloring::new((0..3 * m).map(|v| Z3::new((v / m) as u8)).collect());
    Ok((g, c))
}
