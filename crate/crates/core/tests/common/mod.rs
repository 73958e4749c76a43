#![allow(dead_code)]

use nbc::{Coloring, Graph, Z3};
use proptest::prelude::*;
use rand::Rng;

/// Every 3-balanced coloring check over all `3^n` colorings; returns the
/// first hit.
pub fn brute_force_3_balanced(g: &Graph) -> Option<Coloring> {
    let n = g.n();
    let total = 3u64.pow(n as u32);
    let mut labels = vec![0u8; n];
    for code in 0..total {
        let mut x = code;
        for l in labels.iter_mut() {
            *l = (x % 3) as u8;
            x /= 3;
        }
        let ok = (0..n).all(|v| {
            let mut cnt = [0usize; 3];
            for &w in g.neighbors(v) {
                cnt[labels[w] as usize] += 1;
            }
            cnt[0] == cnt[1] && cnt[1] == cnt[2]
        });
        if ok {
            return Some(Coloring::new(labels.iter().map(|&l| Z3::new(l)).collect()));
        }
    }
    None
}

/// Erdos-Renyi graph on `n` vertices.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Proptest strategy for graphs on `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph together with a permutation of its vertices.
pub fn arb_graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// Tietze's graph: the Petersen graph with one vertex replaced by a triangle.
pub fn tietze() -> Graph {
    // Petersen: outer 0..5, inner 5..10 as a pentagram, spokes i-(i+5).
    // Vertex 0 (neighbors 1, 4, 5) becomes the triangle 0, 10, 11.
    let mut edges = vec![(1, 2), (2, 3), (3, 4), (1, 6), (2, 7), (3, 8), (4, 9)];
    edges.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
    edges.extend([(0, 10), (10, 11), (11, 0), (0, 1), (10, 4), (11, 5)]);
    Graph::from_edges(12, edges).unwrap()
}

pub fn petersen_graph() -> Graph {
    nbc::families::gen_petersen(nbc::families::PetersenParams::new(5, 2).unwrap())
}

/// Every check the cubic module offers, on one 3-balanced cubic graph.
/// Returns the first failure.
pub fn cubic_pipeline_check(g: &Graph, c: &Coloring) -> Result<(), String> {
    use nbc::cubic::*;
    use nbc::graph::{canonical_form_colored, EdgeId};
    use std::collections::BTreeSet;

    let ec = induced_edge_coloring(g, c).map_err(|e| e.to_string())?;
    if !is_tait(g, &ec) {
        return Err("induced coloring is not Tait".into());
    }
    let ms = matchings_from_edge_coloring(g, &ec).map_err(|e| e.to_string())?;
    let mut all = BTreeSet::<EdgeId>::new();
    for m in &ms {
        let mut touched = vec![0; g.n()];
        for e in m {
            touched[e.u] += 1;
            touched[e.v] += 1;
            all.insert(*e);
        }
        if touched.iter().any(|&t| t != 1) {
            return Err("a color class is not a perfect matching".into());
        }
    }
    if all.len() != g.edge_count() {
        return Err("matchings overlap or miss edges".into());
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let cycles = alternating_cycle_cover(g, &ec, Z3::new(i), Z3::new(j)).map_err(|e| e.to_string())?;
        let mut seen = vec![false; g.n()];
        for cyc in &cycles {
            if cyc.len() % 2 != 0 {
                return Err("odd alternating cycle".into());
            }
            for k in 0..cyc.len() {
                let (a, b) = (cyc[k], cyc[(k + 1) % cyc.len()]);
                if !g.has_edge(a, b) || ec.get(a, b) != Some(Z3::new(if k % 2 == 0 { i } else { j })) {
                    return Err("alternating cycle does not alternate".into());
                }
                if std::mem::replace(&mut seen[a], true) {
                    return Err("alternating cycles overlap".into());
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("alternating cycles miss a vertex".into());
        }
    }
    if g.n() <= CYCLE_ENUMERATION_MAX_VERTICES {
        if !check_sum_characterization(g, &ec).map_err(|e| e.to_string())? {
            return Err("sum characterization fails".into());
        }
        for cyc in enumerate_cycles(g).map_err(|e| e.to_string())? {
            if cyc.len() % 2 == 0 && alternating_sum(g, &cyc, &ec).unwrap() != Z3::ZERO {
                return Err("even cycle with nonzero alternating sum".into());
            }
        }
    }
    let rebuilt = reconstruct_vertex_coloring(g, &ec).map_err(|e| e.to_string())?;
    if induced_edge_coloring(g, &rebuilt).unwrap() != ec {
        return Err("reconstruction does not reproduce the edge coloring".into());
    }
    let d = dataset_from_colored_graph(g, c).map_err(|e| e.to_string())?;
    d.validate().map_err(|e| e.to_string())?;
    let (h, hc) = graph_from_dataset(&d).map_err(|e| e.to_string())?;
    let key = |g: &Graph, c: &Coloring| canonical_form_colored(g, &c.as_bytes()).unwrap();
    if key(g, c) != key(&h, &hc) {
        return Err("dataset round trip changes the colored graph".into());
    }
    Ok(())
}
