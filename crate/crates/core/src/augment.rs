//! Random edge addition to a fixed base graph `H`.
//!
//! Two models: exactly `m` non-edges chosen uniformly ([`augment_uniform`]),
//! or every non-edge independently with probability `p`
//! ([`augment_bernoulli`]). Both draw over the lexicographic non-edge list
//! of `H`, so a `(H, parameter, seed)` triple always yields the same `R`.

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::sample::partial_fisher_yates;
use crate::SeedSpec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AugmentError {
    #[error("{requested} random edges requested but the base graph has only {available} non-edges")]
    TooManyEdges { requested: usize, available: usize },
    #[error("edge probability {p} lies outside [0, 1]")]
    InvalidProbability { p: f64 },
    #[error("budget must be split into at least one phase")]
    ZeroPhases,
}

/// `H ∪ R` together with the record of `R`.
#[derive(Debug, Clone, Serialize)]
pub struct AugmentResult {
    #[serde(skip)]
    pub graph: Graph,
    /// Random edges in the order they were drawn.
    pub added: Vec<(usize, usize)>,
    pub base_edge_count: usize,
    pub seed: SeedSpec,
}

impl AugmentResult {
    /// Number of random edges, `|R|`.
    pub fn m(&self) -> usize {
        self.added.len()
    }
}

/// Base graph with its non-edge list cached, for repeated draws.
#[derive(Debug, Clone)]
pub struct Augmenter<'a> {
    base: &'a Graph,
    non_edges: Vec<(usize, usize)>,
}

impl<'a> Augmenter<'a> {
    pub fn new(base: &'a Graph) -> Self {
        Augmenter {
            base,
            non_edges: base.non_edges(),
        }
    }

    pub fn base(&self) -> &Graph {
        self.base
    }

    pub fn non_edges(&self) -> &[(usize, usize)] {
        &self.non_edges
    }

    pub fn uniform(&self, m: usize, seed: SeedSpec) -> Result<AugmentResult, AugmentError> {
        let available = self.non_edges.len();
        if m > available {
            return Err(AugmentError::TooManyEdges {
                requested: m,
                available,
            });
        }
        let mut rng = seed.rng();
        let added: Vec<_> = partial_fisher_yates(available, m, &mut rng)
            .into_iter()
            .map(|i| self.non_edges[i])
            .collect();
        Ok(self.finish(added, seed))
    }

    pub fn bernoulli(&self, p: f64, seed: SeedSpec) -> Result<AugmentResult, AugmentError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(AugmentError::InvalidProbability { p });
        }
        let mut rng = seed.rng();
        let added: Vec<_> = self
            .non_edges
            .iter()
            .copied()
            .filter(|_| rng.random::<f64>() < p)
            .collect();
        Ok(self.finish(added, seed))
    }

    fn finish(&self, added: Vec<(usize, usize)>, seed: SeedSpec) -> AugmentResult {
        let graph = self
            .base
            .with_added_edges(&added)
            .expect("non-edges of the base graph are valid pairs");
        AugmentResult {
            graph,
            added,
            base_edge_count: self.base.edge_count(),
            seed,
        }
    }
}

/// `G_{H,m}`: `H` plus `m` distinct non-edges chosen uniformly at random.
pub fn augment_uniform(h: &Graph, m: usize, seed: SeedSpec) -> Result<AugmentResult, AugmentError> {
    Augmenter::new(h).uniform(m, seed)
}

/// `G_{H,p}`: `H` plus every non-edge independently with probability `p`.
pub fn augment_bernoulli(h: &Graph, p: f64, seed: SeedSpec) -> Result<AugmentResult, AugmentError> {
    Augmenter::new(h).bernoulli(p, seed)
}

/// Splits `m` into `phases` counts differing by at most one, larger first.
pub fn split_budget(m: usize, phases: usize) -> Result<Vec<usize>, AugmentError> {
    if phases == 0 {
        return Err(AugmentError::ZeroPhases);
    }
    let (q, r) = (m / phases, m % phases);
    Ok((0..phases).map(|i| q + usize::from(i < r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};
    use std::collections::HashSet;

    #[test]
    fn uniform_examples() {
        let k4 = complete(4);
        let r = augment_uniform(&k4, 0, SeedSpec::from_seed(1)).unwrap();
        assert_eq!(r.graph, k4);
        assert!(r.added.is_empty());

        let r = augment_uniform(&Graph::empty(3), 3, SeedSpec::from_seed(1)).unwrap();
        assert_eq!(r.graph, complete(3));

        let p3 = path(3);
        for seed in 0..10_000 {
            let r = augment_uniform(&p3, 1, SeedSpec::from_seed(seed)).unwrap();
            assert_eq!(r.added, vec![(0, 2)]);
        }
    }

    #[test]
    fn uniform_rejects_excess_budget() {
        assert_eq!(
            augment_uniform(&path(3), 2, SeedSpec::from_seed(0)).unwrap_err(),
            AugmentError::TooManyEdges {
                requested: 2,
                available: 1
            }
        );
    }

    #[test]
    fn uniform_result_invariants() {
        let h = path(12);
        for seed in 0..50 {
            let r = augment_uniform(&h, 20, SeedSpec::from_seed(seed)).unwrap();
            let distinct: HashSet<_> = r.added.iter().collect();
            assert_eq!(distinct.len(), r.added.len());
            assert!(r.added.iter().all(|&(u, v)| !h.has_edge(u, v)));
            assert_eq!(r.graph.edge_count(), r.base_edge_count + r.m());
        }
    }

    #[test]
    fn uniform_with_all_non_edges_gives_complete_graph() {
        let h = path(9);
        let m = h.non_edge_count();
        for seed in 0..5 {
            let r = augment_uniform(&h, m, SeedSpec::from_seed(seed)).unwrap();
            assert!(r.graph.is_complete());
        }
    }

    #[test]
    fn uniform_choice_passes_chi_square() {
        // Path 0-1-2-3 has the 3 non-edges (0,2), (0,3), (1,3).
        // χ²(2 d.f.) upper 0.001 quantile = 13.8155.
        let h = path(4);
        let non_edges = h.non_edges();
        assert_eq!(non_edges.len(), 3);
        let trials = 40_000u64;
        let mut counts = [0u64; 3];
        let aug = Augmenter::new(&h);
        for seed in 0..trials {
            let r = aug.uniform(1, SeedSpec::new(seed, 11)).unwrap();
            let idx = non_edges.iter().position(|&e| e == r.added[0]).unwrap();
            counts[idx] += 1;
        }
        let expected = trials as f64 / 3.0;
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        assert!(chi2 < 13.8155, "chi2 = {chi2}, counts = {counts:?}");
    }

    #[test]
    fn bernoulli_examples() {
        let h = path(6);
        let r = augment_bernoulli(&h, 0.0, SeedSpec::from_seed(3)).unwrap();
        assert_eq!(r.graph, h);
        let r = augment_bernoulli(&h, 1.0, SeedSpec::from_seed(3)).unwrap();
        assert!(r.graph.is_complete());
        assert!(augment_bernoulli(&h, 1.5, SeedSpec::from_seed(3)).is_err());
        assert!(augment_bernoulli(&h, -0.1, SeedSpec::from_seed(3)).is_err());
    }

    #[test]
    fn bernoulli_mean_matches_binomial() {
        // |R| ~ Bin(1225, 0.1): mean 122.5, σ = sqrt(1225·0.1·0.9) = 10.5.
        // The mean of 2000 draws has σ/sqrt(2000) ≈ 0.2348; 3σ ≈ 0.704.
        let h = Graph::empty(50);
        let aug = Augmenter::new(&h);
        let total: usize = (0..2000)
            .map(|s| aug.bernoulli(0.1, SeedSpec::new(s, 5)).unwrap().m())
            .sum();
        let mean = total as f64 / 2000.0;
        assert!((mean - 122.5).abs() < 3.0 * 10.5 / 2000f64.sqrt(), "mean = {mean}");
    }

    #[test]
    fn split_budget_examples() {
        assert_eq!(split_budget(10, 3).unwrap(), vec![4, 3, 3]);
        assert_eq!(split_budget(0, 2).unwrap(), vec![0, 0]);
        assert_eq!(split_budget(7, 7).unwrap(), vec![1; 7]);
        assert_eq!(split_budget(7, 0), Err(AugmentError::ZeroPhases));
    }

    #[test]
    fn identical_seeds_reproduce() {
        let h = path(20);
        let a = augment_uniform(&h, 15, SeedSpec::new(9, 2)).unwrap();
        let b = augment_uniform(&h, 15, SeedSpec::new(9, 2)).unwrap();
        assert_eq!(a.added, b.added);
        let c = augment_uniform(&h, 15, SeedSpec::new(9, 3)).unwrap();
        assert_ne!(a.added, c.added);
    }
}
