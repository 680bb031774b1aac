use num_rational::Ratio;
use proptest::prelude::*;

use dense_augment::augment::{augment_uniform, split_budget};
use dense_augment::checkers::{
    chromatic_number, clique_number, diameter, is_k_connected, max_subgraph_density, verify_clique, verify_coloring,
    verify_separator, vertex_connectivity, Witness,
};
use dense_augment::generators::{complete_multipartite, disjoint_cliques, nearly_equal_parts, two_cliques};
use dense_augment::harness::{estimate_threshold, isotonic_increasing, wilson_interval, Z_95};
use dense_augment::regularity::{is_eps_regular_exact, pair_density};
use dense_augment::{Graph, SeedSpec, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn non_edges_complement_edges(g in graph_strategy(12)) {
        let n = g.n();
        prop_assert_eq!(g.non_edges().len() + g.edge_count(), n * (n - 1) / 2);
        prop_assert!(g.non_edges().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(g.non_edges().iter().all(|&(u, v)| !g.has_edge(u, v)));
    }

    #[test]
    fn induced_subgraph_invariants(g in graph_strategy(10), mask in any::<u16>()) {
        let n = g.n();
        prop_assert_eq!(g.induced_subgraph(&VertexSet::full(n)).unwrap(), g.clone());
        let ids: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !ids.is_empty() {
            let set = VertexSet::new(ids.clone(), n).unwrap();
            let sub = g.induced_subgraph(&set).unwrap();
            let bound = ids.iter().map(|&v| g.degree(v)).min().unwrap();
            prop_assert!(sub.min_degree().unwrap() <= bound);
        }
    }

    #[test]
    fn adding_an_edge_is_monotone(g in graph_strategy(8), pick in any::<prop::sample::Index>()) {
        let non_edges = g.non_edges();
        prop_assume!(!non_edges.is_empty() && g.n() >= 2);
        let e = non_edges[pick.index(non_edges.len())];
        let h = g.with_added_edges(&[e]).unwrap();
        prop_assert!(clique_number(&h).size >= clique_number(&g).size);
        prop_assert!(vertex_connectivity(&h).unwrap() >= vertex_connectivity(&g).unwrap());
        prop_assert!(diameter(&h).unwrap() <= diameter(&g).unwrap());
        prop_assert!(max_subgraph_density(&h).unwrap().value >= max_subgraph_density(&g).unwrap().value);
    }

    #[test]
    fn witnesses_validate(g in graph_strategy(9), k in 1usize..5) {
        let c = clique_number(&g);
        prop_assert!(verify_clique(&g, &c.vertices));
        prop_assert_eq!(c.vertices.len(), c.size);
        let chi = chromatic_number(&g).unwrap();
        prop_assert!(verify_coloring(&g, &chi.colors));
        prop_assert!(c.size <= chi.chromatic_number);
        let v = is_k_connected(&g, k);
        if let Some(Witness::Separator { vertices }) = &v.witness {
            prop_assert!(!v.holds);
            prop_assert!(vertices.len() < k);
            prop_assert!(verify_separator(&g, vertices));
        }
        if g.n() >= 2 {
            prop_assert_eq!(v.holds, vertex_connectivity(&g).unwrap() >= k && g.n() > k);
        }
        let m = max_subgraph_density(&g).unwrap();
        let sub = g.induced_subgraph(&m.witness_set).unwrap();
        prop_assert_eq!(Ratio::new(sub.edge_count() as i64, sub.n() as i64), m.value);
    }

    #[test]
    fn augmentation_invariants(g in graph_strategy(10), m in 0usize..12, seed in any::<u64>()) {
        let slots = g.non_edge_count();
        match augment_uniform(&g, m, SeedSpec::from_seed(seed)) {
            Ok(r) => {
                prop_assert!(m <= slots);
                prop_assert_eq!(r.graph.edge_count(), g.edge_count() + m);
                prop_assert!(g.edges().all(|(u, v)| r.graph.has_edge(u, v)));
                prop_assert!(r.added.iter().all(|&(u, v)| !g.has_edge(u, v)));
                let again = augment_uniform(&g, m, SeedSpec::from_seed(seed)).unwrap();
                prop_assert_eq!(again.graph, r.graph);
            }
            Err(_) => prop_assert!(m > slots),
        }
    }

    #[test]
    fn split_budget_is_balanced(m in 0usize..1000, phases in 1usize..20) {
        let parts = split_budget(m, phases).unwrap();
        prop_assert_eq!(parts.len(), phases);
        prop_assert_eq!(parts.iter().sum::<usize>(), m);
        prop_assert!(parts.iter().max().unwrap() - parts.iter().min().unwrap() <= 1);
    }

    #[test]
    fn pair_density_symmetric_and_regularity_monotone(
        g in graph_strategy(10),
        split in 1usize..9,
        e1 in 1i64..10,
        e2 in 1i64..10,
    ) {
        let n = g.n();
        prop_assume!(split < n);
        let a = VertexSet::new((0..split).collect(), n).unwrap();
        let b = VertexSet::new((split..n).collect(), n).unwrap();
        prop_assert_eq!(pair_density(&g, &a, &b).unwrap(), pair_density(&g, &b, &a).unwrap());
        let (lo, hi) = (Ratio::new(e1.min(e2), 10), Ratio::new(e1.max(e2), 10));
        let r_lo = is_eps_regular_exact(&g, &a, &b, lo).unwrap();
        let r_hi = is_eps_regular_exact(&g, &a, &b, hi).unwrap();
        if r_lo.is_regular {
            prop_assert!(r_hi.is_regular);
        }
        prop_assert_eq!(r_lo.is_regular, r_lo.violating_pair.is_none());
        if let Some(v) = &r_lo.violating_pair {
            let d = pair_density(&g, &a, &b).unwrap();
            prop_assert!(Ratio::from_integer(v.x.len() as i64) > lo * Ratio::from_integer(a.len() as i64));
            prop_assert!(Ratio::from_integer(v.y.len() as i64) > lo * Ratio::from_integer(b.len() as i64));
            let diff = if v.density > d { v.density - d } else { d - v.density };
            prop_assert!(diff >= lo);
            prop_assert_eq!(pair_density(&g, &v.x, &v.y).unwrap(), v.density);
        }
    }

    #[test]
    fn isotonic_fit_is_monotone_and_preserves_mass(values in proptest::collection::vec(0.0f64..1.0, 1..30)) {
        let w = vec![1.0; values.len()];
        let fit = isotonic_increasing(&values, &w);
        prop_assert!(fit.windows(2).all(|p| p[0] <= p[1] + 1e-12));
        let (s1, s2): (f64, f64) = (values.iter().sum(), fit.iter().sum());
        prop_assert!((s1 - s2).abs() < 1e-9);
    }

    #[test]
    fn threshold_lies_in_bracket(values in proptest::collection::vec(0.0f64..1.0, 2..20)) {
        let grid: Vec<f64> = (0..values.len()).map(|i| (i * i + i) as f64).collect();
        let w = vec![10.0; values.len()];
        if let Ok(t) = estimate_threshold(&grid, &values, &w) {
            prop_assert!(grid.contains(&t.bracket.0) && grid.contains(&t.bracket.1));
            prop_assert!(t.bracket.0 <= t.m_half && t.m_half <= t.bracket.1);
        }
    }

    #[test]
    fn wilson_interval_contains_estimate(trials in 1usize..500, frac in 0.0f64..=1.0) {
        let successes = (frac * trials as f64).round() as usize;
        let (lo, hi) = wilson_interval(successes, trials, Z_95);
        let p = successes as f64 / trials as f64;
        prop_assert!(0.0 <= lo && lo <= p + 1e-12 && p <= hi + 1e-12 && hi <= 1.0);
    }
}

#[test]
fn generator_structure() {
    for n in [6usize, 11, 20, 37, 60] {
        for r0 in 2..=5 {
            let g = complete_multipartite(&nearly_equal_parts(n, r0).unwrap()).unwrap();
            assert_eq!(clique_number(&g).size, r0, "n = {n}, r0 = {r0}");
        }
    }
    for (n, s) in [(12, 4), (13, 4), (30, 7)] {
        let g = disjoint_cliques(n, s).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 0);
        let blocks = dense_augment::generators::clique_blocks(n, s).unwrap();
        for b in blocks {
            let sub = g.induced_subgraph(&b).unwrap();
            assert_eq!(vertex_connectivity(&sub).unwrap(), b.len() - 1);
        }
    }
    let g = two_cliques(10).unwrap();
    assert!(diameter(&g).unwrap().finite().is_none());
    let half = g
        .induced_subgraph(&VertexSet::new((0..5).collect(), 10).unwrap())
        .unwrap();
    assert_eq!(diameter(&half).unwrap().finite(), Some(1));
}
