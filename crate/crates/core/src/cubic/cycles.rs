//! Alternating sums around cycles and the vertex-label reconstruction.
//!
//! Around a cycle `v0 v1 ... v(k-1) v0` whose edge labels are induced by a
//! vertex coloring, `S = sum (-1)^(i-1) x_i` telescopes to
//! `(1 + (-1)^(k-1)) l(v0)`: zero on even cycles and `2 l(v0)` on odd ones.
//! The characterization below therefore asks, for every base vertex, that
//! all even cycles through it give 0 and all odd cycles through it agree.

use std::collections::VecDeque;

use super::{require_cubic, CubicError, EdgeColoring};
use crate::balance::Coloring;
use crate::graph::{connected_components, Graph};
use crate::Z3;

/// Largest order for which all cycles are enumerated.
pub const CYCLE_ENUMERATION_MAX_VERTICES: usize = 14;

/// `S(C)` for the closed walk `cycle[0] cycle[1] ... cycle[k-1] cycle[0]`,
/// where `x_i` labels the edge `(cycle[i-1], cycle[i])`.
pub fn alternating_sum(g: &Graph, cycle: &[usize], ec: &EdgeColoring) -> Result<Z3, CubicError> {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return Err(CubicError::NotACycle);
    }
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != k {
        return Err(CubicError::NotACycle);
    }
    let mut s = Z3::ZERO;
    for i in 1..=k {
        let (a, b) = (cycle[i - 1], cycle[i % k]);
        if !g.has_edge(a, b) {
            return Err(CubicError::NotACycle);
        }
        let x = ec.label(a, b)?;
        s = if i % 2 == 1 { s + x } else { s - x };
    }
    Ok(s)
}

/// Every cycle of `g` once: starting at its least vertex, oriented so the
/// second vertex is smaller than the last.
pub fn enumerate_cycles(g: &Graph) -> Result<Vec<Vec<usize>>, CubicError> {
    let n = g.n();
    if n > CYCLE_ENUMERATION_MAX_VERTICES {
        return Err(CubicError::TooLarge {
            n,
            max: CYCLE_ENUMERATION_MAX_VERTICES,
        });
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        extend(g, s, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    Ok(out)
}

fn extend(g: &Graph, s: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let v = *path.last().expect("path starts at s");
    for &w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            out.push(path.clone());
        } else if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, s, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Whether the edge labels satisfy the alternating-sum condition: for each
/// base vertex, every even cycle through it has `S = 0` and all odd cycles
/// through it share one value of `S`. Cycles are walked from every vertex
/// in both directions. Limited to graphs on at most
/// [`CYCLE_ENUMERATION_MAX_VERTICES`] vertices.
pub fn check_sum_characterization(g: &Graph, ec: &EdgeColoring) -> Result<bool, CubicError> {
    require_cubic(g)?;
    if !super::is_tait(g, ec) {
        return Err(CubicError::NotThreeMatchings);
    }
    let cycles = enumerate_cycles(g)?;
    let mut odd_value: Vec<Option<Z3>> = vec![None; g.n()];
    let mut rotated = Vec::new();
    for cycle in &cycles {
        let k = cycle.len();
        for start in 0..k {
            for reverse in [false, true] {
                rotated.clear();
                rotated.extend((0..k).map(|t| {
                    let idx = if reverse { (start + k - t) % k } else { (start + t) % k };
                    cycle[idx]
                }));
                let s = alternating_sum(g, &rotated, ec)?;
                let v0 = rotated[0];
                if k % 2 == 0 {
                    if s != Z3::ZERO {
                        return Ok(false);
                    }
                } else {
                    match odd_value[v0] {
                        None => odd_value[v0] = Some(s),
                        Some(prev) if prev != s => return Ok(false),
                        Some(_) => {}
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Recovers a vertex coloring inducing `ec`. Per component: take the
/// shortest cycle through the least vertex `v0`, set `l(v0) = (-1)^k S(C)`, then propagate
/// `l(w) = x_vw - l(v)` along a BFS tree from `v0`. Fails with
/// [`CubicError::CharacterizationFails`] when the result does not induce
/// `ec`.
pub fn reconstruct_vertex_coloring(g: &Graph, ec: &EdgeColoring) -> Result<Coloring, CubicError> {
    require_cubic(g)?;
    if !ec.covers(g) {
        let missing = g.edges().find(|e| ec.get(e.u, e.v).is_none());
        return Err(missing.map_or(CubicError::CharacterizationFails, CubicError::MissingEdge));
    }
    let n = g.n();
    let mut label = vec![Z3::ZERO; n];
    for comp in connected_components(g) {
        let v0 = comp[0];
        let cycle = shortest_cycle_through(g, v0).ok_or(CubicError::CharacterizationFails)?;
        let s = alternating_sum(g, &cycle, ec)?;
        label[v0] = if cycle.len() % 2 == 0 { s } else { -s };
        let mut seen = vec![false; n];
        seen[v0] = true;
        let mut queue = VecDeque::from([v0]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    label[w] = ec.label(v, w)? - label[v];
                    queue.push_back(w);
                }
            }
        }
    }
    let c = Coloring::new(label);
    if ec.iter().all(|(e, x)| c[e.u] + c[e.v] == x) {
        Ok(c)
    } else {
        Err(CubicError::CharacterizationFails)
    }
}

/// A shortest cycle through `v`, as a vertex sequence starting at `v` with
/// the second vertex smaller than the last. Among shortest cycles the one
/// found first by BFS with neighbors in index order wins.
fn shortest_cycle_through(g: &Graph, v: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    // branch[x]: the neighbor of v through which BFS reached x.
    let mut branch = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::new();
    for &w in g.neighbors(v) {
        dist[w] = 1;
        parent[w] = v;
        branch[w] = w;
        queue.push_back(w);
    }
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if y == v || y == parent[x] {
                continue;
            }
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                branch[y] = branch[x];
                queue.push_back(y);
            } else if branch[y] != branch[x] {
                let len = dist[x] + dist[y] + 1;
                if best.is_none_or(|(l, _, _)| len < l) {
                    best = Some((len, x, y));
                }
            }
        }
    }
    let (_, x, y) = best?;
    let walk_up = |mut z: usize| {
        let mut p = Vec::new();
        while z != v {
            p.push(z);
            z = parent[z];
        }
        p.reverse();
        p
    };
    let mut cycle = vec![v];
    cycle.extend(walk_up(x));
    let mut back = walk_up(y);
    back.reverse();
    cycle.extend(back);
    if cycle[1] > *cycle.last().expect("cycles have length >= 3") {
        cycle[1..].reverse();
    }
    Some(cycle)
}
