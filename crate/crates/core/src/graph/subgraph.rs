//! Non-induced subgraph containment by backtracking.
//!
//! Pattern vertices are matched in a connectivity order, so after the first
//! vertex of each component every new pattern vertex has a matched neighbor
//! and its candidates come from that neighbor's image. Candidates must have
//! enough degree and be adjacent to the images of all matched pattern
//! neighbors.

use super::Graph;

/// True iff some injective map carries every pattern edge onto a host edge.
pub fn subgraph_monomorphism_exists(pattern: &Graph, host: &Graph) -> bool {
    find_subgraph_monomorphism(pattern, host).is_some()
}

/// One embedding `pattern vertex -> host vertex`, if any exists.
pub fn find_subgraph_monomorphism(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let pn = pattern.n();
    if pn > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if pn == 0 {
        return Some(Vec::new());
    }
    let order = match_order(pattern);
    // For each position, the pattern neighbors matched earlier.
    let mut rank = vec![0usize; pn];
    for (i, &p) in order.iter().enumerate() {
        rank[p] = i;
    }
    let back: Vec<Vec<usize>> = order
        .iter()
        .map(|&p| {
            pattern
                .neighbors(p)
                .iter()
                .copied()
                .filter(|&q| rank[q] < rank[p])
                .collect()
        })
        .collect();

    let mut state = Matcher {
        pattern,
        host,
        order: &order,
        back: &back,
        image: vec![usize::MAX; pn],
        used: vec![false; host.n()],
    };
    state.extend(0).then_some(state.image)
}

/// Connectivity-first order: start each component at a max-degree vertex and
/// repeatedly take the unmatched vertex with the most matched neighbors.
fn match_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in pattern.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: &'a [usize],
    back: &'a [Vec<usize>],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let need = self.pattern.degree(p);
        let candidates: Vec<usize> = match self.back[depth].first() {
            Some(&q) => self.host.neighbors(self.image[q]).to_vec(),
            None => (0..self.host.n()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.host.degree(h) < need {
                continue;
            }
            if !self.back[depth]
                .iter()
                .all(|&q| self.host.has_edge(self.image[q], h))
            {
                continue;
            }
            self.image[p] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[h] = false;
            self.image[p] = usize::MAX;
        }
        false
    }
}
