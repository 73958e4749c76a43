//! Exact backtracking search for balanced colorings.
//!
//! Components are solved independently. Within a component vertices are
//! colored in BFS order from a maximum-degree vertex. Each vertex `w` may see
//! at most `deg(w) / k` neighbors of any one color; once a color saturates at
//! `w`, that color is blocked for every other neighbor of `w`, and an
//! uncolored vertex with every color blocked fails the branch immediately.
//!
//! The affine maps `c -> eps * c + i0` act sharply 2-transitively on ordered
//! pairs of distinct colors, so per component the first vertex gets the first
//! palette color and the first vertex colored differently gets the second.

use std::collections::VecDeque;

use serde::Serialize;

use super::{Coloring, SignedColoring};
use crate::graph::{connected_components, Graph};
use crate::Z3;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of color assignments tried across all components.
    pub budget: u64,
    /// Try colors in descending instead of ascending order.
    pub reversed_colors: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            reversed_colors: false,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: u64) -> Self {
        SolverConfig {
            budget,
            ..Self::default()
        }
    }

    pub fn reversed(self) -> Self {
        SolverConfig {
            reversed_colors: true,
            ..self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveOutcome<C> {
    Found { coloring: C, nodes: u64 },
    /// The search space was exhausted: no balanced coloring exists.
    NoSolution { nodes: u64 },
    BudgetExhausted { nodes: u64 },
}

impl<C> SolveOutcome<C> {
    pub fn coloring(&self) -> Option<&C> {
        match self {
            SolveOutcome::Found { coloring, .. } => Some(coloring),
            _ => None,
        }
    }

    pub fn into_coloring(self) -> Option<C> {
        match self {
            SolveOutcome::Found { coloring, .. } => Some(coloring),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SolveOutcome::Found { .. })
    }

    pub fn is_none(&self) -> bool {
        matches!(self, SolveOutcome::NoSolution { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SolveOutcome::Found { nodes, .. }
            | SolveOutcome::NoSolution { nodes }
            | SolveOutcome::BudgetExhausted { nodes } => *nodes,
        }
    }

    /// `Some(true)` when found, `Some(false)` when proven impossible,
    /// `None` when the budget ran out.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            SolveOutcome::Found { .. } => Some(true),
            SolveOutcome::NoSolution { .. } => Some(false),
            SolveOutcome::BudgetExhausted { .. } => None,
        }
    }
}

/// Searches for a 3-balanced coloring.
pub fn solve_3_balanced(g: &Graph, config: SolverConfig) -> SolveOutcome<Coloring> {
    solve(g, 3, config).map_labels(|labels| {
        Coloring::new(labels.into_iter().map(Z3::new).collect())
    })
}

/// Searches for a ±1 labeling in which every neighborhood sums to zero.
pub fn solve_2_balanced(g: &Graph, config: SolverConfig) -> SolveOutcome<SignedColoring> {
    solve(g, 2, config).map_labels(|labels| {
        SignedColoring::new(labels.into_iter().map(|l| if l == 0 { 1 } else { -1 }).collect())
            .expect("labels are 0 or 1")
    })
}

impl SolveOutcome<Vec<u8>> {
    fn map_labels<C>(self, f: impl FnOnce(Vec<u8>) -> C) -> SolveOutcome<C> {
        match self {
            SolveOutcome::Found { coloring, nodes } => SolveOutcome::Found {
                coloring: f(coloring),
                nodes,
            },
            SolveOutcome::NoSolution { nodes } => SolveOutcome::NoSolution { nodes },
            SolveOutcome::BudgetExhausted { nodes } => SolveOutcome::BudgetExhausted { nodes },
        }
    }
}

const UNSET: u8 = u8::MAX;

fn solve(g: &Graph, k: usize, config: SolverConfig) -> SolveOutcome<Vec<u8>> {
    let n = g.n();
    let palette: Vec<u8> = if config.reversed_colors {
        (0..k as u8).rev().collect()
    } else {
        (0..k as u8).collect()
    };
    let mut search = Search {
        g,
        k,
        cap: g.degrees().map(|d| (d / k) as u32).collect(),
        counts: vec![[0; 3]; n],
        blocked: vec![[0; 3]; n],
        color: vec![UNSET; n],
        order: Vec::new(),
        palette,
        nodes: 0,
        budget: config.budget,
    };
    for comp in connected_components(g) {
        if comp.iter().any(|&v| !g.degree(v).is_multiple_of(k)) {
            return SolveOutcome::NoSolution {
                nodes: search.nodes,
            };
        }
        search.order = bfs_order(g, &comp);
        match search.run(0, false) {
            Step::Solved => {}
            Step::Failed => {
                return SolveOutcome::NoSolution {
                    nodes: search.nodes,
                }
            }
            Step::OutOfBudget => {
                return SolveOutcome::BudgetExhausted {
                    nodes: search.nodes,
                }
            }
        }
    }
    SolveOutcome::Found {
        coloring: search.color,
        nodes: search.nodes,
    }
}

/// BFS from the least-index maximum-degree vertex, neighbors in index order.
fn bfs_order(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let start = *comp
        .iter()
        .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("components are nonempty");
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut order = Vec::with_capacity(comp.len());
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

enum Step {
    Solved,
    Failed,
    OutOfBudget,
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    cap: Vec<u32>,
    counts: Vec<[u32; 3]>,
    /// `blocked[x][c]`: neighbors of `x` already saturated in color `c`.
    blocked: Vec<[u32; 3]>,
    color: Vec<u8>,
    order: Vec<usize>,
    palette: Vec<u8>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `split`: whether a vertex of this component already took a color other
    /// than the first palette entry.
    fn run(&mut self, depth: usize, split: bool) -> Step {
        if depth == self.order.len() {
            return Step::Solved;
        }
        let v = self.order[depth];
        let choices = if depth == 0 {
            1
        } else if split || self.k == 2 {
            self.k
        } else {
            2
        };
        for i in 0..choices {
            let c = self.palette[i];
            if self.blocked[v][c as usize] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let consistent = self.assign(v, c);
            if consistent {
                match self.run(depth + 1, split || i > 0) {
                    Step::Failed => {}
                    done => return done,
                }
            }
            self.unassign(v, c);
        }
        Step::Failed
    }

    /// Colors `v` and propagates saturation; returns false when some
    /// uncolored vertex is left without a usable color.
    fn assign(&mut self, v: usize, c: u8) -> bool {
        let g = self.g;
        let ci = c as usize;
        self.color[v] = c;
        let mut ok = true;
        for &w in g.neighbors(v) {
            self.counts[w][ci] += 1;
            if self.counts[w][ci] == self.cap[w] {
                for &x in g.neighbors(w) {
                    self.blocked[x][ci] += 1;
                    if ok && self.color[x] == UNSET && self.dead(x) {
                        ok = false;
                    }
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: u8) {
        let g = self.g;
        let ci = c as usize;
        for &w in g.neighbors(v) {
            if self.counts[w][ci] == self.cap[w] {
                for &x in g.neighbors(w) {
                    self.blocked[x][ci] -= 1;
                }
            }
            self.counts[w][ci] -= 1;
        }
        self.color[v] = UNSET;
    }

    fn dead(&self, x: usize) -> bool {
        self.blocked[x][..self.k].iter().all(|&b| b > 0)
    }
}
