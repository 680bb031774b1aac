//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Each vertex keeps both a sorted neighbor list (deterministic iteration
//! order) and a row of a packed adjacency bit matrix (constant-time
//! membership, word-parallel set operations for the exact checkers).

mod io;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use io::{parse_edge_list, read_edge_list, write_edge_list};

use crate::bits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("operation needs at least one vertex")]
    EmptyGraph,
    #[error("vertex {v} is not a valid id for a graph on {n} vertices")]
    InvalidVertex { v: usize, n: usize },
    #[error("vertex {v} appears more than once in a vertex set")]
    DuplicateVertex { v: usize },
    #[error("density parameter must lie strictly between 0 and 1, got {0}")]
    InvalidDensity(String),
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

/// Simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    matrix: Vec<u64>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            matrix: vec![0; n * words],
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from unordered pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let words = bits::words_for(n);
        let mut matrix = vec![0u64; n * words];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            bits::set(&mut matrix[u * words..(u + 1) * words], v);
            bits::set(&mut matrix[v * words..(v + 1) * words], u);
        }
        Ok(Self::from_matrix(n, words, matrix))
    }

    fn from_matrix(n: usize, words: usize, matrix: Vec<u64>) -> Self {
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| bits::iter(&matrix[v * words..(v + 1) * words]).collect())
            .collect();
        let degree_sum: usize = adj.iter().map(Vec::len).sum();
        Graph {
            n,
            words,
            matrix,
            adj,
            edge_count: degree_sum / 2,
        }
    }

    /// Returns `self ∪ extra`. Pairs already present are ignored.
    pub fn with_added_edges(&self, extra: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut matrix = self.matrix.clone();
        let (n, words) = (self.n, self.words);
        for &(u, v) in extra {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            bits::set(&mut matrix[u * words..(u + 1) * words], v);
            bits::set(&mut matrix[v * words..(v + 1) * words], u);
        }
        Ok(Self::from_matrix(n, words, matrix))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing id order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::contains(self.row(u), v)
    }

    /// Packed adjacency row of `v`; bit `u` is set iff `uv` is an edge.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.matrix[v * self.words..(v + 1) * self.words]
    }

    /// Number of `u64` words in every adjacency row.
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj.iter().map(Vec::len).min().ok_or(GraphError::EmptyGraph)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Membership in the dense family: minimum degree at least `⌈d·n⌉`.
    pub fn is_dense(&self, d: &DensityParam) -> bool {
        match self.min_degree() {
            Ok(delta) => delta >= d.min_degree_for(self.n),
            Err(_) => true,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.edge_count == self.n * (self.n - 1) / 2
    }

    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn non_edge_count(&self) -> usize {
        self.pair_count() - self.edge_count
    }

    /// All non-adjacent pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.non_edge_count());
        for u in 0..self.n {
            let row = self.row(u);
            for v in u + 1..self.n {
                if !bits::contains(row, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Subgraph induced by `set`, relabelled `0..|set|` in set order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(&v) = set.as_slice().iter().find(|&&v| v >= self.n) {
            return Err(GraphError::InvalidVertex { v, n: self.n });
        }
        Ok(self.induced_unchecked(set.as_slice()))
    }

    /// Induced subgraph on sorted, distinct, in-range ids.
    pub(crate) fn induced_unchecked(&self, ids: &[usize]) -> Graph {
        let k = ids.len();
        let words = bits::words_for(k);
        let mut matrix = vec![0u64; k * words];
        for (i, &u) in ids.iter().enumerate() {
            let row = self.row(u);
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if bits::contains(row, v) {
                    bits::set(&mut matrix[i * words..(i + 1) * words], j);
                    bits::set(&mut matrix[j * words..(j + 1) * words], i);
                }
            }
        }
        Graph::from_matrix(k, words, matrix)
    }

    /// Number of edges with one endpoint in `a` and the other in `b`.
    /// The sets are assumed disjoint.
    pub fn cross_edge_count(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter()
            .map(|u| b.iter().filter(|&v| self.has_edge(u, v)).count())
            .sum()
    }
}

/// Minimum-degree density parameter `d ∈ (0, 1)`, kept as an exact rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DensityParam(Ratio<i64>);

impl DensityParam {
    pub fn new(value: Ratio<i64>) -> Result<Self, GraphError> {
        if value <= Ratio::zero() || value >= Ratio::from_integer(1) {
            return Err(GraphError::InvalidDensity(value.to_string()));
        }
        Ok(DensityParam(value))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self, GraphError> {
        if denom == 0 {
            return Err(GraphError::InvalidDensity(format!("{numer}/{denom}")));
        }
        Self::new(Ratio::new(numer, denom))
    }

    /// Nearest simple rational to `value` (`0.2` becomes `1/5`).
    pub fn from_f64(value: f64) -> Result<Self, GraphError> {
        let r = Ratio::<i64>::approximate_float(value).ok_or_else(|| GraphError::InvalidDensity(value.to_string()))?;
        Self::new(r)
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    pub fn as_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `⌈d·n⌉`, the smallest admissible minimum degree on `n` vertices.
    pub fn min_degree_for(&self, n: usize) -> usize {
        let scaled = self.0 * Ratio::from_integer(n as i64);
        scaled.ceil().to_integer() as usize
    }
}

impl fmt::Display for DensityParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for DensityParam {
    type Err = GraphError;

    /// Accepts `a/b` or a plain decimal such as `0.15`, both parsed exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidDensity(s.to_string());
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            return Self::from_ratio(a, b);
        }
        Self::new(parse_decimal(s).ok_or_else(bad)?)
    }
}

/// Exact parse of a non-negative decimal literal.
pub(crate) fn parse_decimal(s: &str) -> Option<Ratio<i64>> {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    if frac.len() > 15 {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: i64 = if digits.is_empty() { 0 } else { digits.parse().ok()? };
    let denom = 10i64.checked_pow(frac.len() as u32)?;
    Some(Ratio::new(numer, denom))
}

impl Serialize for DensityParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for DensityParam {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(x) => DensityParam::from_f64(x).map_err(serde::de::Error::custom),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Sorted set of distinct vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts `ids`; rejects duplicates and ids `>= n`.
    pub fn new(mut ids: Vec<usize>, n: usize) -> Result<Self, GraphError> {
        ids.sort_unstable();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex { v: w[0] });
            }
        }
        if let Some(&v) = ids.last() {
            if v >= n {
                return Err(GraphError::InvalidVertex { v, n });
            }
        }
        Ok(VertexSet(ids))
    }

    /// `{0, 1, …, n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub(crate) fn from_sorted_unchecked(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

/// Serializes an exact rational as its `"p/q"` string form.
pub(crate) fn serialize_ratio<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Exact `e(S) / |S|` for a vertex set.
pub(crate) fn set_density(g: &Graph, ids: &[usize]) -> Ratio<i64> {
    let mut e = 0i64;
    for (i, &u) in ids.iter().enumerate() {
        for &v in &ids[i + 1..] {
            if g.has_edge(u, v) {
                e += 1;
            }
        }
    }
    let size = ids.len() as i64;
    if size == 0 {
        Ratio::zero()
    } else {
        let g = e.gcd(&size);
        Ratio::new_raw(e / g, size / g)
    }
}
