//! Partition of a graph with minimum degree `k` into parts of at least
//! `⌈k/8⌉` vertices, each inducing a `⌈k²/(16n)⌉`-connected subgraph.
//!
//! Seeds come from [`mader_subgraph`], a certified search for a
//! `⌈k/4⌉`-connected subgraph in a graph of average degree at least `k`.
//! Outside vertices are then absorbed into any part where they have
//! enough neighbours; whatever is left has high minimum degree, so new
//! seeds are extracted from it and the cycle repeats.

use serde::Serialize;
use thiserror::Error;

use crate::checkers::{is_k_connected, vertex_connectivity, CheckError, Witness};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("k must be positive")]
    ZeroK,
    #[error("average degree {edges2}/{n} is below k = {k}")]
    AverageDegreeTooLow { edges2: usize, n: usize, k: usize },
    #[error("minimum degree {min_degree} is below k = {k}")]
    MinDegreeTooLow { min_degree: usize, k: usize },
    #[error("internal search failure (defect): {0}")]
    Defect(String),
    #[error(transparent)]
    Check(#[from] CheckError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionResult {
    pub k: usize,
    /// `⌈k/8⌉`
    pub min_part_size: usize,
    /// `⌈k²/(16n)⌉`
    pub min_connectivity: usize,
    pub parts: Vec<VertexSet>,
    /// `κ(G[V_i])`, computed by an independent checker call per part.
    pub per_part_connectivity: Vec<usize>,
    /// The `⌈k/8⌉`-connected seeds `C_i ⊆ V_i`, one per part.
    pub seed_subgraphs: Vec<VertexSet>,
}

/// A vertex set `S` with `κ(G[S]) ≥ ⌈k/4⌉`, for `G` of average degree ≥ `k`.
///
/// With `c = ⌈k/4⌉ ≥ 2` and `γ = 2c − 2`, the search keeps a set `S` with
/// `|S| ≥ 2c − 2` and `e(S) > γ(|S| − c + 1)`, which `V(G)` satisfies.
/// Deleting a vertex of degree `≤ γ` keeps the property; once none is
/// left, either `G[S]` is `c`-connected or a separator `X` with `|X| < c`
/// splits `S` into two overlapping sides, at least one of which still has
/// the property. Every step shrinks `S`, and the answer is certified by
/// the connectivity checker.
pub fn mader_subgraph(g: &Graph, k: usize) -> Result<VertexSet, PartitionError> {
    if k == 0 {
        return Err(PartitionError::ZeroK);
    }
    let n = g.n();
    if n == 0 || 2 * g.edge_count() < k * n {
        return Err(PartitionError::AverageDegreeTooLow {
            edges2: 2 * g.edge_count(),
            n,
            k,
        });
    }
    let c = k.div_ceil(4);
    let found = if c == 1 { densest_component(g) } else { descend(g, c)? };
    let sub = g.induced_unchecked(&found);
    if !is_k_connected(&sub, c).holds {
        return Err(PartitionError::Defect(format!(
            "subgraph on {} vertices is not {c}-connected",
            found.len()
        )));
    }
    Ok(VertexSet::from_sorted_unchecked(found))
}

/// Connected component maximising `e(C)/|C|`, lowest first vertex on ties.
/// Its average degree is at least that of `g`, so it contains an edge.
fn densest_component(g: &Graph) -> Vec<usize> {
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for comp in components(g, &(0..g.n()).collect::<Vec<_>>()) {
        let e2: usize = comp.iter().map(|&v| g.degree(v)).sum();
        let better = match &best {
            None => true,
            Some((be2, bsize, _)) => e2 * bsize > be2 * comp.len(),
        };
        if better {
            best = Some((e2, comp.len(), comp));
        }
    }
    best.expect("graph has vertices").2
}

/// Connected components of `G[ids]` as sorted vertex lists, ordered by
/// smallest vertex.
fn components(g: &Graph, ids: &[usize]) -> Vec<Vec<usize>> {
    let mut inside = vec![false; g.n()];
    for &v in ids {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &s in ids {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn edges_within(g: &Graph, ids: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in ids {
        inside[v] = true;
    }
    ids.iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| inside[w]).count())
        .sum::<usize>()
        / 2
}

fn descend(g: &Graph, c: usize) -> Result<Vec<usize>, PartitionError> {
    let gamma = 2 * c - 2;
    let holds = |ids: &[usize]| ids.len() >= gamma && edges_within(g, ids) + gamma * (c - 1) > gamma * ids.len();
    let mut s: Vec<usize> = (0..g.n()).collect();
    if !holds(&s) {
        return Err(PartitionError::Defect(
            "starting set fails the density invariant".into(),
        ));
    }
    loop {
        peel(g, &mut s, gamma);
        if s.len() <= gamma {
            return Err(PartitionError::Defect(format!(
                "peeling reached {} vertices with the invariant intact",
                s.len()
            )));
        }
        let sub = g.induced_unchecked(&s);
        let verdict = is_k_connected(&sub, c);
        if verdict.holds {
            return Ok(s);
        }
        let sep_local = match verdict.witness {
            Some(Witness::Separator { vertices }) => vertices,
            other => {
                return Err(PartitionError::Defect(format!(
                    "unexpected connectivity witness {other:?}"
                )));
            }
        };
        let sep: Vec<usize> = sep_local.iter().map(|&i| s[i]).collect();
        let rest: Vec<usize> = s.iter().copied().filter(|v| !sep.contains(v)).collect();
        let first = components(g, &rest).swap_remove(0);
        let mut side_a: Vec<usize> = first.iter().chain(&sep).copied().collect();
        side_a.sort_unstable();
        let side_b: Vec<usize> = s.iter().copied().filter(|v| first.binary_search(v).is_err()).collect();
        s = if holds(&side_a) {
            side_a
        } else if holds(&side_b) {
            side_b
        } else {
            return Err(PartitionError::Defect(
                "neither side of a small separator keeps the invariant".into(),
            ));
        };
    }
}

/// Repeatedly removes a minimum-degree vertex (lowest id) of `G[s]` while
/// its degree is at most `gamma` and more than `gamma` vertices remain.
fn peel(g: &Graph, s: &mut Vec<usize>, gamma: usize) {
    let mut inside = vec![false; g.n()];
    for &v in s.iter() {
        inside[v] = true;
    }
    let mut deg: Vec<usize> = vec![0; g.n()];
    for &v in s.iter() {
        deg[v] = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
    }
    let mut alive = s.len();
    while alive > gamma {
        let v = (0..g.n())
            .filter(|&v| inside[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("set is non-empty");
        if deg[v] > gamma {
            break;
        }
        inside[v] = false;
        alive -= 1;
        for &w in g.neighbors(v) {
            if inside[w] {
                deg[w] -= 1;
            }
        }
    }
    s.retain(|&v| inside[v]);
}

/// Partition `V(G)` into parts of size `≥ ⌈k/8⌉` whose induced subgraphs
/// are `⌈k²/(16n)⌉`-connected. Requires minimum degree at least `k > 0`.
pub fn dense_partition(g: &Graph, k: usize) -> Result<PartitionResult, PartitionError> {
    if k == 0 {
        return Err(PartitionError::ZeroK);
    }
    let n = g.n();
    let min_degree = g
        .min_degree()
        .map_err(|_| PartitionError::MinDegreeTooLow { min_degree: 0, k })?;
    if min_degree < k {
        return Err(PartitionError::MinDegreeTooLow { min_degree, k });
    }
    let half = k.div_ceil(2);
    let min_part_size = k.div_ceil(8);
    let min_connectivity = (k * k).div_ceil(16 * n);

    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut seeds: Vec<Vec<usize>> = Vec::new();
    let mut rest: Vec<usize> = (0..n).collect();
    while !rest.is_empty() {
        let before = rest.len();
        // Extract seeds from the unassigned vertices while their average
        // degree allows it.
        loop {
            let sub = g.induced_unchecked(&rest);
            if sub.n() == 0 || 2 * sub.edge_count() < half * sub.n() {
                break;
            }
            let local = mader_subgraph(&sub, half)?;
            let seed: Vec<usize> = local.iter().map(|i| rest[i]).collect();
            for &v in &seed {
                owner[v] = Some(parts.len());
            }
            parts.push(seed.clone());
            seeds.push(seed);
            rest.retain(|&v| owner[v].is_none());
        }
        absorb(g, &mut parts, &mut owner, min_connectivity);
        rest.retain(|&v| owner[v].is_none());
        if rest.len() == before {
            return Err(PartitionError::Defect(format!(
                "{} vertices could be neither seeded nor absorbed",
                rest.len()
            )));
        }
    }

    let parts: Vec<VertexSet> = parts
        .into_iter()
        .map(|mut p| {
            p.sort_unstable();
            VertexSet::from_sorted_unchecked(p)
        })
        .collect();
    let seed_subgraphs = seeds.into_iter().map(VertexSet::from_sorted_unchecked).collect();
    let per_part_connectivity = parts
        .iter()
        .map(|p| vertex_connectivity(&g.induced_unchecked(p.as_slice())))
        .collect::<Result<Vec<_>, _>>()?;
    let result = PartitionResult {
        k,
        min_part_size,
        min_connectivity,
        parts,
        per_part_connectivity,
        seed_subgraphs,
    };
    verify_partition(g, &result)?;
    Ok(result)
}

/// Moves outside vertices into the lowest-index part where they have at
/// least `need` neighbours, until no vertex qualifies.
fn absorb(g: &Graph, parts: &mut [Vec<usize>], owner: &mut [Option<usize>], need: usize) {
    let n = g.n();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if owner[v].is_some() {
                continue;
            }
            let mut counts = vec![0usize; parts.len()];
            for &w in g.neighbors(v) {
                if let Some(i) = owner[w] {
                    counts[i] += 1;
                }
            }
            if let Some(i) = counts.iter().position(|&c| c >= need) {
                parts[i].push(v);
                owner[v] = Some(i);
                changed = true;
                if cfg!(debug_assertions) {
                    let mut ids = parts[i].clone();
                    ids.sort_unstable();
                    debug_assert!(
                        is_k_connected(&g.induced_unchecked(&ids), need).holds,
                        "absorbing {v} broke connectivity of part {i}"
                    );
                }
            }
        }
    }
}

/// Re-checks every output invariant of `result` against `g` with fresh
/// checker calls.
pub fn verify_partition(g: &Graph, result: &PartitionResult) -> Result<(), PartitionError> {
    let n = g.n();
    let fail = |msg: String| Err(PartitionError::Defect(msg));
    let mut covered = vec![false; n];
    for (i, part) in result.parts.iter().enumerate() {
        for v in part.iter() {
            if v >= n || std::mem::replace(&mut covered[v], true) {
                return fail(format!("vertex {v} is out of range or in two parts"));
            }
        }
        if part.len() < result.min_part_size {
            return fail(format!(
                "part {i} has {} < {} vertices",
                part.len(),
                result.min_part_size
            ));
        }
        let sub = g.induced_unchecked(part.as_slice());
        if !is_k_connected(&sub, result.min_connectivity).holds {
            return fail(format!("part {i} is not {}-connected", result.min_connectivity));
        }
        let seed = &result.seed_subgraphs[i];
        if !seed.iter().all(|v| part.contains(v)) {
            return fail(format!("seed {i} is not inside its part"));
        }
        if !is_k_connected(&g.induced_unchecked(seed.as_slice()), result.min_part_size).holds {
            return fail(format!("seed {i} is not {}-connected", result.min_part_size));
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return fail(format!("vertex {v} is in no part"));
    }
    if result.parts.len() * result.k > 8 * n {
        return fail(format!("{} parts exceed 8n/k", result.parts.len()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{blocked_gnp, complete, disjoint_cliques, mader_tightness_graph};
    use crate::{DensityParam, SeedSpec};

    #[test]
    fn mader_examples() {
        for k in 1..9 {
            let s = mader_subgraph(&complete(k + 1), k).unwrap();
            assert_eq!(s.len(), k + 1);
        }
        let g = disjoint_cliques(18, 9).unwrap();
        let s = mader_subgraph(&g, 8).unwrap();
        assert!(s.as_slice() == (0..9).collect::<Vec<_>>() || s.as_slice() == (9..18).collect::<Vec<_>>());
    }

    #[test]
    fn mader_on_tightness_graph() {
        let g = mader_tightness_graph(30, 5, SeedSpec::from_seed(4)).unwrap();
        let s = mader_subgraph(&g, 5).unwrap();
        assert!(vertex_connectivity(&g.induced_subgraph(&s).unwrap()).unwrap() >= 2);
    }

    #[test]
    fn mader_rejects_sparse_input() {
        assert!(matches!(
            mader_subgraph(&crate::generators::path(5), 2),
            Err(PartitionError::AverageDegreeTooLow { .. })
        ));
        assert_eq!(mader_subgraph(&complete(3), 0), Err(PartitionError::ZeroK));
    }

    #[test]
    fn mader_on_random_dense_graphs() {
        for seed in 0..20 {
            let g = crate::generators::gnp(40, 0.5, SeedSpec::from_seed(seed)).unwrap();
            let k = 2 * g.edge_count() / g.n();
            let s = mader_subgraph(&g, k).unwrap();
            let kappa = vertex_connectivity(&g.induced_subgraph(&s).unwrap()).unwrap();
            assert!(kappa >= k.div_ceil(4), "seed {seed}: κ = {kappa}, k = {k}");
        }
    }

    #[test]
    fn partition_of_disjoint_cliques() {
        let g = disjoint_cliques(40, 8).unwrap();
        let r = dense_partition(&g, 7).unwrap();
        assert_eq!(r.parts.len(), 5);
        assert_eq!(r.min_connectivity, 1);
        for (i, p) in r.parts.iter().enumerate() {
            assert_eq!(p.as_slice(), (8 * i..8 * i + 8).collect::<Vec<_>>());
        }
        assert_eq!(r.per_part_connectivity, vec![7; 5]);
    }

    #[test]
    fn partition_of_complete_graph() {
        let r = dense_partition(&complete(12), 11).unwrap();
        assert_eq!(r.parts.len(), 1);
        assert_eq!(r.per_part_connectivity, vec![11]);
    }

    #[test]
    fn partition_of_blocked_gnp() {
        let d = DensityParam::from_ratio(1, 5).unwrap();
        for seed in 0..3 {
            let g = blocked_gnp(80, &d, SeedSpec::from_seed(seed)).unwrap();
            let r = dense_partition(&g, 16).unwrap();
            assert_eq!(r.min_part_size, 2);
            assert_eq!(r.min_connectivity, 1);
            assert!(r.per_part_connectivity.iter().all(|&c| c >= 1));
        }
    }

    #[test]
    fn partition_rejects_low_min_degree() {
        assert_eq!(
            dense_partition(&crate::generators::path(4), 2),
            Err(PartitionError::MinDegreeTooLow { min_degree: 1, k: 2 })
        );
    }
}
