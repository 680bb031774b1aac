//! Vertex connectivity through unit-capacity flows on the vertex-split
//! network (`v_in = 2v`, `v_out = 2v + 1`), with Even–Tarjan's source
//! schedule: if `κ(G) < k` then one of any `k` vertices avoids a minimum
//! separator, so sources beyond the first `k` never need to be tried.

use super::flow::FlowNetwork;
use super::verdict::{Budget, PropertyVerdict, Witness};
use super::CheckError;
use crate::graph::Graph;

struct SplitNetwork {
    net: FlowNetwork,
    n: usize,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, n as i64);
            net.add_arc(2 * v + 1, 2 * u, n as i64);
        }
        SplitNetwork { net, n }
    }

    /// Local connectivity between non-adjacent `s` and `t`, capped at
    /// `limit`; below the cap also returns a minimum `s`–`t` separator.
    fn local(&mut self, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<usize>>) {
        self.net.reset();
        let flow = self.net.max_flow(2 * s + 1, 2 * t, limit as i64) as usize;
        if flow >= limit {
            return (flow, None);
        }
        let reach = self.net.residual_reachable(2 * s + 1);
        let sep = (0..self.n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
        (flow, Some(sep))
    }
}

/// Smallest separator of size `< limit` found by the Even–Tarjan schedule.
fn search(g: &Graph, limit: usize, budget: &Budget) -> Result<Option<Vec<usize>>, CheckError> {
    let n = g.n();
    let mut net = SplitNetwork::new(g);
    let mut best: Option<Vec<usize>> = None;
    let mut bound = limit;
    let mut i = 0;
    while i < n && i < bound {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            if budget.expired() {
                return Err(CheckError::Interrupted);
            }
            if let (flow, Some(sep)) = net.local(i, j, bound) {
                debug_assert_eq!(sep.len(), flow);
                bound = flow;
                best = Some(sep);
                if bound == 0 {
                    return Ok(best);
                }
            }
        }
        i += 1;
    }
    Ok(best)
}

/// `κ(G) ≥ k`: true iff `n > k` and no set of fewer than `k` vertices
/// disconnects `G`. A negative answer carries a separator or the
/// `n ≤ k` certificate.
pub fn is_k_connected(g: &Graph, k: usize) -> PropertyVerdict {
    is_k_connected_within(g, k, &Budget::unlimited()).expect("unlimited budget never expires")
}

pub fn is_k_connected_within(g: &Graph, k: usize, budget: &Budget) -> Result<PropertyVerdict, CheckError> {
    let n = g.n();
    if k == 0 {
        return Ok(if n >= 1 {
            PropertyVerdict::yes(None)
        } else {
            PropertyVerdict::no(Some(Witness::TooFewVertices { n, k }))
        });
    }
    if n <= k {
        return Ok(PropertyVerdict::no(Some(Witness::TooFewVertices { n, k })));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) < k) {
        return Ok(PropertyVerdict::no(Some(Witness::Separator {
            vertices: g.neighbors(v).to_vec(),
        })));
    }
    Ok(match search(g, k, budget)? {
        Some(sep) => PropertyVerdict::no(Some(Witness::Separator { vertices: sep })),
        None => PropertyVerdict::yes(None),
    })
}

/// `κ(G)`, with `κ(K_n) = n − 1`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, CheckError> {
    vertex_connectivity_within(g, &Budget::unlimited())
}

pub fn vertex_connectivity_within(g: &Graph, budget: &Budget) -> Result<usize, CheckError> {
    let n = g.n();
    if n < 2 {
        return Err(CheckError::TooFewVertices { n, min: 2 });
    }
    Ok(min_vertex_separator_within(g, budget)?.map_or(n - 1, |s| s.len()))
}

/// A minimum vertex separator, or `None` for complete graphs.
pub fn min_vertex_separator(g: &Graph) -> Option<Vec<usize>> {
    min_vertex_separator_within(g, &Budget::unlimited()).expect("unlimited budget never expires")
}

fn min_vertex_separator_within(g: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>, CheckError> {
    if g.is_complete() {
        return Ok(None);
    }
    let n = g.n();
    // A minimum-degree vertex has a non-neighbour, so its neighbourhood
    // separates and bounds κ from above.
    let v = (0..n)
        .min_by_key(|&v| (g.degree(v), v))
        .expect("non-complete graph has vertices");
    let start = g.neighbors(v).to_vec();
    Ok(Some(search(g, start.len(), budget)?.unwrap_or(start)))
}
