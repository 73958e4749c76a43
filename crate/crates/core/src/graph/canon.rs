//! Canonical labeling by partition refinement with individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell in
//! turn, recurse. Every discrete leaf induces a relabelled adjacency matrix and
//! the largest one is the certificate. Leaves with equal certificates yield
//! automorphisms, which prune sibling subtrees lying in a common orbit of the
//! pointwise stabilizer of the current prefix.

use super::{Graph, GraphError};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 20;

/// Isomorphism-invariant byte string: equal for two graphs iff they are
/// isomorphic (color-preserving, for the colored variant).
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
    labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    /// `labeling()[v]` is the canonical position of vertex `v`; relabelling a
    /// graph with it yields the canonical representative.
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }
}

// Comparisons ignore the labeling, which differs between isomorphic inputs.
impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.bytes == other.bytes
    }
}

impl Eq for CanonicalForm {}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bytes.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bytes.cmp(&other.bytes)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_colored(g, &vec![0; g.n()])
}

/// Canonical form of a vertex-colored graph; isomorphisms must preserve
/// `colors`.
pub fn canonical_form_colored(g: &Graph, colors: &[u8]) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(GraphError::SizeLimitExceeded {
            n,
            max: CANON_MAX_VERTICES,
        });
    }
    assert_eq!(colors.len(), n, "one color per vertex");
    let nbrs: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], g.degree(v), v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(cell)
                if colors[cell[0]] == colors[v] && g.degree(cell[0]) == g.degree(v) =>
            {
                cell.push(v)
            }
            _ => cells.push(vec![v]),
        }
    }

    let mut search = Search {
        nbrs: &nbrs,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    let (cert, lab) = search.best.expect("the search reaches at least one leaf");

    let mut labeling = vec![0; n];
    for (pos, &v) in lab.iter().enumerate() {
        labeling[v] = pos;
    }
    let row_bytes = n.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + n + n * row_bytes);
    bytes.push(n as u8);
    bytes.extend(lab.iter().map(|&v| colors[v]));
    for row in cert {
        bytes.extend_from_slice(&row.to_le_bytes()[..row_bytes]);
    }
    Ok(CanonicalForm { bytes, labeling })
}

struct Search<'a> {
    nbrs: &'a [u32],
    /// Best certificate so far and the leaf order producing it.
    best: Option<(Vec<u32>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.nbrs, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(lab);
            return;
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let n = lab.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<u32> = lab
            .iter()
            .map(|&v| {
                let mut row = 0u32;
                let mut bits = self.nbrs[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    row |= 1 << pos[w];
                    bits &= bits - 1;
                }
                row
            })
            .collect();
        match &self.best {
            None => self.best = Some((cert, lab)),
            Some((best_cert, best_lab)) => match cert.cmp(best_cert) {
                std::cmp::Ordering::Greater => self.best = Some((cert, lab)),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0usize; n];
                    for i in 0..n {
                        gamma[lab[i]] = best_lab[i];
                    }
                    if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                        self.autos.push(gamma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.nbrs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

/// Refines an ordered partition until it is equitable. Cells are split by the
/// number of neighbors in a splitter cell, pieces ordered by that count, so
/// the result commutes with relabelling.
fn refine(nbrs: &[u32], cells: &mut Vec<Vec<usize>>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s].iter().fold(0u32, |acc, &v| acc | 1 << v);
        let mut split_any = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
        for cell in cells.drain(..) {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(u32, usize)> = cell
                .iter()
                .map(|&v| ((nbrs[v] & splitter).count_ones(), v))
                .collect();
            if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                next.push(cell);
                continue;
            }
            split_any = true;
            keyed.sort_unstable();
            let mut current = keyed[0].0;
            let mut piece = Vec::new();
            for (c, v) in keyed {
                if c != current {
                    next.push(std::mem::take(&mut piece));
                    current = c;
                }
                piece.push(v);
            }
            next.push(piece);
        }
        *cells = next;
        s = if split_any { 0 } else { s + 1 };
    }
}
