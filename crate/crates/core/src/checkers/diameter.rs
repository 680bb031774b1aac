//! Diameter by breadth-first search from every vertex, with frontiers kept
//! as bit sets so each layer costs `O(n²/64)`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::verdict::{PropertyVerdict, Witness};
use super::CheckError;
use crate::bits;
use crate::graph::Graph;

/// Graph diameter; `Infinite` (disconnected) compares above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    pub fn at_most(self, bound: usize) -> bool {
        self <= Diameter::Finite(bound)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Largest distance from `source`, stopping early once it exceeds `cap`.
/// Returns the distance (or `Infinite`) and a vertex attaining it.
fn bfs_eccentricity(g: &Graph, source: usize, cap: usize) -> (Diameter, usize) {
    let n = g.n();
    let mut visited = vec![0u64; bits::words_for(n)];
    bits::set(&mut visited, source);
    let mut frontier = visited.clone();
    let mut next = vec![0u64; visited.len()];
    let mut depth = 0;
    let mut last = source;
    let mut reached = 1;
    while reached < n {
        if depth == cap {
            let far = (0..n)
                .find(|&v| !bits::contains(&visited, v))
                .expect("unvisited vertex exists");
            return (Diameter::Finite(depth + 1), far);
        }
        next.iter_mut().for_each(|w| *w = 0);
        for u in bits::iter(&frontier) {
            bits::or_assign(&mut next, g.row(u));
        }
        bits::and_not_assign(&mut next, &visited);
        if bits::is_empty(&next) {
            let far = (0..n)
                .find(|&v| !bits::contains(&visited, v))
                .expect("unvisited vertex exists");
            return (Diameter::Infinite, far);
        }
        depth += 1;
        reached += bits::count(&next);
        bits::or_assign(&mut visited, &next);
        last = bits::first(&next).expect("non-empty layer");
        std::mem::swap(&mut frontier, &mut next);
    }
    (Diameter::Finite(depth), last)
}

fn distance(g: &Graph, source: usize, target: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        if u == target {
            return Some(dist[u]);
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Largest distance from `v` to any other vertex.
pub fn eccentricity(g: &Graph, v: usize) -> Result<Diameter, CheckError> {
    if v >= g.n() {
        return Err(CheckError::InvalidArgument(format!(
            "vertex {v} out of range for n = {}",
            g.n()
        )));
    }
    Ok(bfs_eccentricity(g, v, usize::MAX).0)
}

pub fn diameter(g: &Graph) -> Result<Diameter, CheckError> {
    far_pair(g).map(|(d, _, _)| d)
}

/// The diameter with a pair `(u, v)` realising it (`u == v` when `n = 1`).
pub fn far_pair(g: &Graph) -> Result<(Diameter, usize, usize), CheckError> {
    if g.n() == 0 {
        return Err(CheckError::EmptyGraph);
    }
    let mut best = (Diameter::Finite(0), 0, 0);
    for u in 0..g.n() {
        let (d, v) = bfs_eccentricity(g, u, usize::MAX);
        if d > best.0 {
            best = (d, u, v);
            if d == Diameter::Infinite {
                break;
            }
        }
    }
    Ok(best)
}

/// `diam(G) ≤ bound`, stopping at the first pair farther apart than `bound`.
/// On failure the witness is that pair with its exact distance (`None`
/// when the two vertices lie in different components).
pub fn diameter_at_most(g: &Graph, bound: usize) -> Result<PropertyVerdict, CheckError> {
    if g.n() == 0 {
        return Err(CheckError::EmptyGraph);
    }
    for u in 0..g.n() {
        let (d, v) = bfs_eccentricity(g, u, bound);
        if !d.at_most(bound) {
            let distance = distance(g, u, v);
            return Ok(PropertyVerdict::no(Some(Witness::FarPair { u, v, distance })));
        }
    }
    Ok(PropertyVerdict::yes(None))
}
