use dense_augment::checkers::{is_k_connected, vertex_connectivity};
use dense_augment::generators::mader_tightness_construction;
use dense_augment::partition::mader_subgraph;
use dense_augment::{SeedSpec, VertexSet};

/// Every vertex set meeting two cliques and the independent set induces
/// a graph whose connectivity is at most its number of independent-set
/// vertices. Exhaustive over all subsets.
fn check_exhaustively(n: usize, k: usize, seed: u64) -> usize {
    let c = mader_tightness_construction(n, k, SeedSpec::from_seed(seed)).unwrap();
    assert!(
        !c.independent.is_empty(),
        "instance ({n}, {k}) has no independent vertices"
    );
    let mut checked = 0;
    for mask in 1u32..1 << n {
        let ids: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let in_i = ids.iter().filter(|&&v| c.independent.contains(v)).count();
        let cliques_met = c.cliques.iter().filter(|q| ids.iter().any(|&v| q.contains(v))).count();
        if in_i == 0 || cliques_met < 2 {
            continue;
        }
        let sub = c.graph.induced_subgraph(&VertexSet::new(ids, n).unwrap()).unwrap();
        let kappa = vertex_connectivity(&sub).unwrap();
        assert!(
            kappa <= in_i,
            "({n}, {k}, seed {seed}) mask {mask:#b}: κ = {kappa} > |K ∩ I| = {in_i}"
        );
        checked += 1;
    }
    checked
}

#[test]
fn connectivity_bounded_by_independent_part_n14() {
    for seed in 0..3 {
        assert!(check_exhaustively(14, 3, seed) > 1000);
    }
}

#[test]
fn connectivity_bounded_by_independent_part_other_sizes() {
    assert!(check_exhaustively(10, 2, 1) > 100);
    assert!(check_exhaustively(13, 3, 2) > 100);
    assert!(check_exhaustively(11, 2, 3) > 100);
}

#[test]
fn large_instance_without_independent_part_still_has_connected_core() {
    // (30, 5): five K_6 blocks fill the vertex set, so I is empty and the
    // bound is vacuous; a ⌈5/4⌉-connected subgraph still exists.
    let c = mader_tightness_construction(30, 5, SeedSpec::from_seed(7)).unwrap();
    assert!(c.independent.is_empty());
    let s = mader_subgraph(&c.graph, 5).unwrap();
    let sub = c.graph.induced_subgraph(&s).unwrap();
    assert!(is_k_connected(&sub, 2).holds);
}
