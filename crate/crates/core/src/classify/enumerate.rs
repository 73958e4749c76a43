use std::collections::BTreeMap;

use rayon::prelude::*;

use super::ClassifyError;
use crate::graph::{canonical_form, CanonicalForm, Graph};

/// Largest order accepted by [`enumerate_cubic`].
pub const ENUMERATION_MAX_VERTICES: usize = 14;

/// Which deficient vertex receives the next edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AugmentOrder {
    /// Lowest-numbered vertex of degree < 3, partners tried ascending.
    #[default]
    Forward,
    /// Highest-numbered vertex of degree < 3, partners tried descending.
    Reversed,
}

/// One connected cubic graph per isomorphism class on `n` vertices, each in
/// canonical labeling, sorted by canonical form.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>, ClassifyError> {
    enumerate_cubic_with(n, AugmentOrder::Forward)
}

/// [`enumerate_cubic`] with an explicit augmentation order; both orders
/// produce the same classes.
///
/// Graphs grow one edge at a time from the empty graph. The new edge always
/// touches the chosen deficient vertex `v`, so any subgraph of a cubic graph
/// `G` has a child that is again a subgraph of `G`, whichever representative
/// of its class is stored. Each level is reduced to one graph per class by
/// canonical form.
pub fn enumerate_cubic_with(n: usize, order: AugmentOrder) -> Result<Vec<Graph>, ClassifyError> {
    if n < 4 || !n.is_multiple_of(2) || n > ENUMERATION_MAX_VERTICES {
        return Err(ClassifyError::BadN(n));
    }
    let mut level = vec![Partial::empty(n)];
    for _ in 0..3 * n / 2 {
        let children: Vec<(CanonicalForm, Partial)> = level
            .par_iter()
            .flat_map_iter(|p| p.children(order))
            .map(|c| {
                let g = c.graph();
                let cf = canonical_form(&g).expect("n <= 14");
                let rep = Partial::from_graph(&g.permute(cf.labeling()));
                (cf, rep)
            })
            .collect();
        let mut next: BTreeMap<CanonicalForm, Partial> = BTreeMap::new();
        for (cf, rep) in children {
            next.entry(cf).or_insert(rep);
        }
        level = next.into_values().collect();
    }
    Ok(level.iter().map(Partial::graph).collect())
}

#[derive(Clone, Debug)]
struct Partial {
    adj: Vec<u16>,
}

impl Partial {
    fn empty(n: usize) -> Partial {
        Partial { adj: vec![0; n] }
    }

    fn from_graph(g: &Graph) -> Partial {
        let mut p = Partial::empty(g.n());
        for e in g.edges() {
            p.adj[e.u] |= 1 << e.v;
            p.adj[e.v] |= 1 << e.u;
        }
        p
    }

    fn graph(&self) -> Graph {
        let n = self.adj.len();
        let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| self.adj[u] >> v & 1 == 1).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("partials are simple")
    }

    fn deg(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn children(&self, order: AugmentOrder) -> Vec<Partial> {
        let n = self.adj.len();
        let verts: Vec<usize> = match order {
            AugmentOrder::Forward => (0..n).collect(),
            AugmentOrder::Reversed => (0..n).rev().collect(),
        };
        let Some(&v) = verts.iter().find(|&&v| self.deg(v) < 3) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut isolated_tried = false;
        for &w in &verts {
            if w == v || self.deg(w) >= 3 || self.adj[v] >> w & 1 == 1 {
                continue;
            }
            // Isolated partners are interchangeable; one suffices.
            if self.deg(w) == 0 {
                if isolated_tried {
                    continue;
                }
                isolated_tried = true;
            }
            let mut c = self.clone();
            c.adj[v] |= 1 << w;
            c.adj[w] |= 1 << v;
            if !c.has_closed_proper_component() {
                out.push(c);
            }
        }
        out
    }

    /// A component that is already cubic but is not the whole graph can
    /// never become part of a connected cubic graph.
    fn has_closed_proper_component(&self) -> bool {
        let n = self.adj.len();
        let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
        let mut seen: u16 = 0;
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp: u16 = 1 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & !comp;
                comp |= new;
                frontier |= new;
            }
            seen |= comp;
            if comp != full && comp.count_ones() > 1 {
                let closed = (0..n).filter(|&v| comp >> v & 1 == 1).all(|v| self.deg(v) == 3);
                if closed {
                    return true;
                }
            }
        }
        false
    }
}
