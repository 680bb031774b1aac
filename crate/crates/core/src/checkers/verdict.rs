use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bits;
use crate::graph::Graph;

/// Evidence attached to a verdict. Every variant can be re-validated in
/// polynomial time with the `verify_*` functions below.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Clique {
        vertices: Vec<usize>,
    },
    /// Removing these vertices disconnects the graph.
    Separator {
        vertices: Vec<usize>,
    },
    /// `n <= k`, so the graph cannot be `k`-connected.
    TooFewVertices {
        n: usize,
        k: usize,
    },
    Coloring {
        colors: Vec<usize>,
    },
    /// A pair realising the diameter; `distance` is `None` when disconnected.
    FarPair {
        u: usize,
        v: usize,
        distance: Option<usize>,
    },
    /// Counting certificate: `edges` random edges give at most
    /// `2·edges` clique incidences, so some of the `parts` cliques meets
    /// fewer than `k` of them.
    Pigeonhole {
        parts: usize,
        max_edges: usize,
        k: usize,
        max_min_incidence: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    pub fn yes(witness: Option<Witness>) -> Self {
        PropertyVerdict { holds: true, witness }
    }

    pub fn no(witness: Option<Witness>) -> Self {
        PropertyVerdict { holds: false, witness }
    }
}

/// Optional wall-clock limit for the exponential searches.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_timeout(limit: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + limit),
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Polls a [`Budget`] every few thousand search nodes.
pub(crate) struct Ticker<'a> {
    budget: &'a Budget,
    count: u32,
}

impl<'a> Ticker<'a> {
    pub(crate) fn new(budget: &'a Budget) -> Self {
        Ticker { budget, count: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.count = self.count.wrapping_add(1);
        self.count & 0xFFF == 0 && self.budget.expired()
    }
}

pub fn verify_clique(g: &Graph, vertices: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in vertices {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// `true` iff `G − sep` has at least two vertices and is disconnected.
pub fn verify_separator(g: &Graph, sep: &[usize]) -> bool {
    let n = g.n();
    let mut alive = bits::full(n);
    for &v in sep {
        if v >= n || !bits::contains(&alive, v) {
            return false;
        }
        bits::clear(&mut alive, v);
    }
    let remaining = bits::count(&alive);
    if remaining < 2 {
        return false;
    }
    let start = bits::first(&alive).expect("at least two vertices remain");
    let mut seen = vec![0u64; alive.len()];
    bits::set(&mut seen, start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if bits::contains(&alive, w) && !bits::contains(&seen, w) {
                bits::set(&mut seen, w);
                stack.push(w);
            }
        }
    }
    bits::count(&seen) < remaining
}

pub fn verify_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|(u, v)| colors[u] != colors[v])
}
