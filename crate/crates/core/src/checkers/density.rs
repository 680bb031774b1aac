//! Maximum subgraph density `max e(S)/|S|` by Goldberg's min-cut test and
//! a binary search over the grid `t / (n(n−1))`.
//!
//! Two distinct densities with denominators at most `n` differ by at least
//! `1/(n(n−1))`, so once the search interval has that width it holds
//! exactly one attainable value, and the last set found is optimal.

use num_rational::Ratio;
use serde::Serialize;

use super::flow::FlowNetwork;
use super::CheckError;
use crate::graph::{serialize_ratio, set_density, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityMeasure {
    #[serde(serialize_with = "serialize_ratio")]
    pub value: Ratio<i64>,
    pub witness_set: VertexSet,
}

/// A set `S` with `e(S)/|S| > t/q`, if one exists.
///
/// The cut of a source side `S` costs `2(t|S| − q·e(S))` plus a constant
/// equal to the total source capacity, so such a set exists iff the
/// minimum cut falls below that constant.
fn denser_than(g: &Graph, t: i64, q: i64) -> Option<Vec<usize>> {
    let n = g.n();
    let (source, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    let mut source_total = 0i64;
    for v in 0..n {
        let c = 2 * t - g.degree(v) as i64 * q;
        if c >= 0 {
            net.add_arc(v, sink, c);
        } else {
            net.add_arc(source, v, -c);
            source_total -= c;
        }
    }
    for (u, v) in g.edges() {
        net.add_arc(u, v, q);
        net.add_arc(v, u, q);
    }
    let cut = net.max_flow(source, sink, i64::MAX);
    if cut >= source_total {
        return None;
    }
    let reach = net.residual_reachable(source);
    Some((0..n).filter(|&v| reach[v]).collect())
}

/// `m(G) = max e(H')/v(H')` over non-empty induced subgraphs, as an exact
/// rational with a set attaining it.
pub fn max_subgraph_density(g: &Graph) -> Result<DensityMeasure, CheckError> {
    let n = g.n();
    if n == 0 {
        return Err(CheckError::EmptyGraph);
    }
    let Some((u, v)) = g.edges().next() else {
        return Ok(DensityMeasure {
            value: Ratio::from_integer(0),
            witness_set: VertexSet::from_sorted_unchecked(vec![0]),
        });
    };
    let q = (n * (n - 1)) as i64;
    let mut best = vec![u, v];
    // density(best) = 1/2 > lo/q; nothing exceeds (n−1)/2 = hi/q
    let mut lo = q / 2 - 1;
    let mut hi = q * (n as i64 - 1) / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match denser_than(g, mid, q) {
            Some(set) => {
                debug_assert!(set_density(g, &set) * q > Ratio::from_integer(mid));
                best = set;
                lo = mid;
            }
            None => hi = mid,
        }
    }
    Ok(DensityMeasure {
        value: set_density(g, &best),
        witness_set: VertexSet::from_sorted_unchecked(best),
    })
}
