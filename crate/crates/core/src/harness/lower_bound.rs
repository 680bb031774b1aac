use serde::Serialize;

use super::HarnessError;
use crate::augment::Augmenter;
use crate::checkers::{is_k_connected, verify_separator, PropertyVerdict, Witness};
use crate::generators::{clique_blocks, disjoint_cliques};
use crate::graph::{DensityParam, VertexSet};
use crate::SeedSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpotCheckReport {
    pub samples: usize,
    pub edges_per_sample: usize,
    /// Samples where the pigeonhole clique yielded a verified separator
    /// of fewer than `k` vertices.
    pub separators_verified: usize,
    /// Samples where the flow checker independently reported the graph
    /// not `k`-connected.
    pub flow_confirmed: usize,
}

struct Setting {
    blocks: Vec<VertexSet>,
    k: usize,
    max_edges: usize,
}

fn setting(name: &str, n: usize, d: &DensityParam, k: usize) -> Result<Setting, HarnessError> {
    if name != "thm6" {
        return Err(HarnessError::UnknownPreset(name.to_string()));
    }
    let invalid = |msg: String| Err(HarnessError::InvalidPresetParams(msg));
    if k == 0 {
        return invalid("k must be at least 1".into());
    }
    let clique_size = d.min_degree_for(n) + 1;
    if clique_size < k + 1 {
        return invalid(format!("cliques of size {clique_size} are too small for k = {k}"));
    }
    let blocks = clique_blocks(n, clique_size)?;
    let t = blocks.len();
    if t < 2 {
        return invalid(format!("only {t} clique(s) of size {clique_size} fit in n = {n}"));
    }
    Ok(Setting {
        blocks,
        k,
        max_edges: (k * t).div_ceil(2) - 1,
    })
}

/// Deterministic certificate that adding any `|R| < (k/2)·t` edges to
/// `t = ⌊n/(⌈dn⌉+1)⌋` disjoint cliques leaves the graph not `k`-connected.
///
/// Each added edge meets at most two cliques, so `|R| ≤ ⌈kt/2⌉ − 1` edges
/// give fewer than `kt` incidences and some clique meets fewer than `k` of
/// them. The endpoints of those edges inside that clique then separate its
/// remaining vertices (there are some, as the clique has more than `k − 1`
/// vertices) from the other cliques.
pub fn deterministic_lower_bound_check(
    name: &str,
    n: usize,
    d: &DensityParam,
    k: usize,
) -> Result<PropertyVerdict, HarnessError> {
    let s = setting(name, n, d, k)?;
    let t = s.blocks.len();
    let max_min_incidence = 2 * s.max_edges / t;
    debug_assert!(max_min_incidence < k);
    Ok(PropertyVerdict::yes(Some(Witness::Pigeonhole {
        parts: t,
        max_edges: s.max_edges,
        k,
        max_min_incidence,
    })))
}

/// Separator of size `< k` read off the least-incident clique, following
/// the pigeonhole argument.
fn pigeonhole_separator(
    blocks: &[VertexSet],
    block_of: &[usize],
    added: &[(usize, usize)],
    k: usize,
) -> Option<Vec<usize>> {
    let mut incidence = vec![0usize; blocks.len()];
    for &(u, v) in added {
        incidence[block_of[u]] += 1;
        incidence[block_of[v]] += 1;
    }
    let (c, &count) = incidence.iter().enumerate().min_by_key(|&(i, &x)| (x, i))?;
    if count >= k {
        return None;
    }
    let mut sep: Vec<usize> = added
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .filter(|&x| block_of[x] == c)
        .collect();
    sep.sort_unstable();
    sep.dedup();
    Some(sep)
}

/// Draws `samples` uniform edge sets of the largest size covered by the
/// certificate and confirms each outcome twice: by the separator the
/// pigeonhole argument names, and by the flow checker.
pub fn spot_check_lower_bound(
    name: &str,
    n: usize,
    d: &DensityParam,
    k: usize,
    samples: usize,
    seed: SeedSpec,
) -> Result<SpotCheckReport, HarnessError> {
    let s = setting(name, n, d, k)?;
    let h = disjoint_cliques(n, d.min_degree_for(n) + 1)?;
    let mut block_of = vec![0; n];
    for (i, b) in s.blocks.iter().enumerate() {
        for v in b.iter() {
            block_of[v] = i;
        }
    }
    let aug = Augmenter::new(&h);
    let mut report = SpotCheckReport {
        samples,
        edges_per_sample: s.max_edges,
        separators_verified: 0,
        flow_confirmed: 0,
    };
    for i in 0..samples {
        let r = aug.uniform(s.max_edges, seed.child(i as u64))?;
        if let Some(sep) = pigeonhole_separator(&s.blocks, &block_of, &r.added, s.k) {
            if sep.len() < s.k && verify_separator(&r.graph, &sep) {
                report.separators_verified += 1;
            }
        }
        if !is_k_connected(&r.graph, s.k).holds {
            report.flow_confirmed += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DensityParam {
        s.parse().unwrap()
    }

    #[test]
    fn certificate_values() {
        let v = deterministic_lower_bound_check("thm6", 60, &d("0.2"), 4).unwrap();
        assert!(v.holds);
        assert_eq!(
            v.witness,
            Some(Witness::Pigeonhole {
                parts: 4,
                max_edges: 7,
                k: 4,
                max_min_incidence: 3
            })
        );
        let v = deterministic_lower_bound_check("thm6", 120, &d("0.1"), 3).unwrap();
        assert!(matches!(
            v.witness,
            Some(Witness::Pigeonhole {
                parts: 9,
                max_edges: 13,
                ..
            })
        ));
        let v = deterministic_lower_bound_check("thm6", 90, &d("0.3"), 5).unwrap();
        assert!(matches!(
            v.witness,
            Some(Witness::Pigeonhole {
                parts: 3,
                max_edges: 7,
                ..
            })
        ));
    }

    #[test]
    fn rejects_wrong_name_and_parameters() {
        assert!(matches!(
            deterministic_lower_bound_check("thm5", 60, &d("0.2"), 4),
            Err(HarnessError::UnknownPreset(_))
        ));
        assert!(deterministic_lower_bound_check("thm6", 60, &d("0.2"), 0).is_err());
        assert!(deterministic_lower_bound_check("thm6", 60, &d("0.2"), 20).is_err());
        assert!(deterministic_lower_bound_check("thm6", 20, &d("0.6"), 2).is_err());
    }

    #[test]
    fn empty_edge_set_leaves_graph_disconnected() {
        let h = disjoint_cliques(60, 13).unwrap();
        assert!(!is_k_connected(&h, 1).holds);
        let v = deterministic_lower_bound_check("thm6", 60, &d("0.2"), 1).unwrap();
        assert!(matches!(v.witness, Some(Witness::Pigeonhole { max_edges: 1, .. })));
    }

    #[test]
    fn spot_checks_confirm() {
        let r = spot_check_lower_bound("thm6", 60, &d("0.2"), 4, 20, SeedSpec::from_seed(3)).unwrap();
        assert_eq!(r.edges_per_sample, 7);
        assert_eq!(r.separators_verified, 20);
        assert_eq!(r.flow_confirmed, 20);
    }
}
