use nbc::balance::{is_2_balanced, is_3_balanced, solve_2_balanced, solve_3_balanced};
use nbc::families::*;
use nbc::{Coloring, Graph, SignedColoring, SolverConfig, Z3};
use proptest::prelude::*;

/// Regular graphs with a known 3-balanced coloring.
fn pool() -> Vec<(Graph, Coloring)> {
    let mut out = Vec::new();
    for (m, j) in [(6, 1), (9, 1), (9, 2), (12, 5)] {
        let p = PetersenParams::new(m, j).unwrap();
        out.push((gen_petersen(p), petersen_coloring(p).unwrap()));
    }
    let p = PappusParams::new(6, 1, 3).unwrap();
    out.push((gen_pappus(p), pappus_coloring(p).unwrap()));
    out.push((mobius_ladder(12).unwrap(), mobius_coloring(12).unwrap()));
    let k33 = Graph::complete_bipartite(3, 3);
    let c = solve_3_balanced(&k33, SolverConfig::default()).into_coloring().unwrap();
    out.push((k33, c));
    out
}

/// Edgeless parts with equal thirds, usable inside joins.
fn empty_parts() -> Vec<(Graph, Coloring)> {
    [3, 6].into_iter().map(|n| (Graph::empty(n), thirds_coloring(n).unwrap())).collect()
}

fn idx(len: usize) -> impl Strategy<Value = usize> {
    0..len
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn join_along_random_base(base_bits in proptest::collection::vec(any::<bool>(), 6), picks in proptest::collection::vec(idx(9), 4)) {
        let mut parts_pool = pool();
        parts_pool.extend(empty_parts());
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                if base_bits[k] {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        let base = Graph::from_edges(4, edges).unwrap();
        let chosen: Vec<&(Graph, Coloring)> = picks.iter().map(|&i| &parts_pool[i]).collect();
        let graphs: Vec<Graph> = chosen.iter().map(|(g, _)| g.clone()).collect();
        let colorings: Vec<Coloring> = chosen.iter().map(|(_, c)| c.clone()).collect();
        let g = join_along(&base, &graphs).unwrap();
        prop_assert!(is_3_balanced(&g, &join_coloring(&colorings)).unwrap());
    }

    #[test]
    fn gluing_random_inputs(picks in proptest::collection::vec((idx(7), any::<u16>()), 2..4)) {
        let pool = pool();
        let inputs: Vec<(Graph, usize)> = picks
            .iter()
            .map(|&(i, v)| (pool[i].0.clone(), v as usize % pool[i].0.n()))
            .collect();
        let colorings: Vec<Coloring> = picks.iter().map(|&(i, _)| pool[i].1.clone()).collect();
        let glued = glue_at_vertex(&inputs).unwrap();
        let c = glue_colorings(&inputs, &glued, &colorings).unwrap();
        prop_assert!(is_3_balanced(&glued.graph, &c).unwrap());
    }

    #[test]
    fn edge_disjoint_color_preserving_copies(pick in idx(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let (g, c) = pool()[pick].clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        // Shuffle vertices within each color class.
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for col in Z3::ALL {
            let class: Vec<usize> = (0..g.n()).filter(|&v| c[v] == col).collect();
            let mut shuffled = class.clone();
            shuffled.shuffle(&mut rng);
            for (a, b) in class.into_iter().zip(shuffled) {
                perm[a] = b;
            }
        }
        let h = g.permute(&perm);
        prop_assert!(is_3_balanced(&h, &c).unwrap());
        let disjoint = g.edges().all(|e| !h.has_edge(e.u, e.v));
        let union = Graph::from_edges_merged(g.n(), g.edge_list().into_iter().chain(h.edge_list())).unwrap();
        match edge_disjoint_union_check(&[g.clone(), h.clone()], &c) {
            Ok(checked) => {
                prop_assert!(disjoint && checked);
                prop_assert!(is_3_balanced(&union, &c).unwrap());
            }
            Err(FamilyError::EdgesOverlap(e)) => prop_assert!(!disjoint && g.has_edge(e.u, e.v) && h.has_edge(e.u, e.v)),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn sum_rule_products(a in idx(7), b in idx(7), kind in prop_oneof![Just(ProductKind::Cartesian), Just(ProductKind::Tensor), Just(ProductKind::Strong)]) {
        let pool = pool();
        // Keep products small.
        prop_assume!(pool[a].0.n() * pool[b].0.n() <= 150);
        let (g1, c1) = &pool[a];
        let (g2, c2) = &pool[b];
        let c = product_coloring(g1, g2, kind, &ProductLabels::Sum(c1.clone(), c2.clone())).unwrap();
        prop_assert!(is_3_balanced(&product(g1, g2, kind), &c).unwrap());
    }

    #[test]
    fn signed_rule_tensor(a in idx(7), k in 1usize..4) {
        let (g1, c1) = pool()[a].clone();
        let g2 = Graph::cycle(4 * k);
        let s = solve_2_balanced(&g2, SolverConfig::default()).into_coloring().unwrap();
        prop_assert!(is_2_balanced(&g2, &s).unwrap());
        let c = product_coloring(&g1, &g2, ProductKind::Tensor, &ProductLabels::Signed(c1, s)).unwrap();
        prop_assert!(is_3_balanced(&product(&g1, &g2, ProductKind::Tensor), &c).unwrap());
    }

    #[test]
    fn lexicographic_projection(bits in proptest::collection::vec(any::<bool>(), 6), b in idx(7)) {
        let mut edges = Vec::new();
        let mut k = 0;
        for x in 0..4 {
            for y in x + 1..4 {
                if bits[k] {
                    edges.push((x, y));
                }
                k += 1;
            }
        }
        let g1 = Graph::from_edges(4, edges).unwrap();
        let (g2, c2) = pool()[b].clone();
        let c = product_coloring(&g1, &g2, ProductKind::Lexicographic, &ProductLabels::RightProjection(c2)).unwrap();
        prop_assert!(is_3_balanced(&product(&g1, &g2, ProductKind::Lexicographic), &c).unwrap());
    }
}

#[test]
fn degree_sequences() {
    for p in PetersenParams::all(5..=20) {
        let g = gen_petersen(p);
        assert_eq!((g.n(), g.edge_count()), (2 * p.m(), 3 * p.m()));
        assert!(g.is_cubic());
    }
    for p in PappusParams::all(4..=16) {
        let g = gen_pappus(p);
        assert_eq!(g.n(), 3 * p.m());
        let m = p.m();
        for i in 0..m {
            assert_eq!(g.degree(i), 3);
            assert_eq!(g.degree(m + i), 3);
            assert_eq!(g.degree(2 * m + i), if p.is_cubic() { 3 } else { 4 });
        }
    }
    for n in (4..=30).step_by(2) {
        let g = mobius_ladder(n).unwrap();
        assert!(g.is_cubic());
        assert_eq!(g.edge_count(), 3 * n / 2);
    }
}

#[test]
fn signed_labels_on_cycle() {
    let s = SignedColoring::new(vec![1, 1, -1, -1]).unwrap();
    assert!(is_2_balanced(&Graph::cycle(4), &s).unwrap());
}
