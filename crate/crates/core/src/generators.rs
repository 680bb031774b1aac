//! Base graphs: the extremal constructions behind the threshold results,
//! the classical random models, and a few small named graphs.
//!
//! Seeded generators are pure functions of their parameters and a
//! [`SeedSpec`]; identical inputs give bit-identical edge sets.

use std::path::PathBuf;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{read_edge_list, DensityParam, Graph, GraphError, VertexSet};
use crate::sample::partial_fisher_yates;
use crate::SeedSpec;

/// Attempts [`blocked_gnp`] makes before giving up on the degree filter.
pub const DEFAULT_BLOCKED_GNP_ATTEMPTS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("part list is empty")]
    EmptyPartList,
    #[error("part {index} has size 0")]
    EmptyPart { index: usize },
    #[error("cannot split {n} vertices into {parts} non-empty parts")]
    InvalidPartCount { n: usize, parts: usize },
    #[error("clique size must be at least 1")]
    ZeroCliqueSize,
    #[error("clique size {size} exceeds vertex count {n}")]
    CliqueLargerThanGraph { size: usize, n: usize },
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("edge probability {p} lies outside [0, 1]")]
    InvalidProbability { p: f64 },
    #[error("no draw reached minimum degree {required} after {attempts} attempts")]
    RetriesExhausted { attempts: usize, required: usize },
    #[error("{m} edges requested but only {max} pairs exist")]
    TooManyEdges { m: usize, max: usize },
    #[error("invalid tightness parameters n = {n}, k = {k}: {reason}")]
    InvalidTightnessParams { n: usize, k: usize, reason: String },
    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).expect("complete graph edges are valid")
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::TooFewVertices { n, min: 3 });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("Petersen edges are valid")
}

/// Vertices grouped into consecutive blocks of the given sizes; two
/// vertices are adjacent iff they lie in different blocks.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph, GeneratorError> {
    if part_sizes.is_empty() {
        return Err(GeneratorError::EmptyPartList);
    }
    if let Some(index) = part_sizes.iter().position(|&s| s == 0) {
        return Err(GeneratorError::EmptyPart { index });
    }
    let mut owner = Vec::new();
    for (i, &s) in part_sizes.iter().enumerate() {
        owner.extend(std::iter::repeat_n(i, s));
    }
    let n = owner.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if owner[u] != owner[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// `r0` sizes differing by at most one, larger parts first, summing to `n`.
pub fn nearly_equal_parts(n: usize, r0: usize) -> Result<Vec<usize>, GeneratorError> {
    if r0 == 0 || r0 > n {
        return Err(GeneratorError::InvalidPartCount { n, parts: r0 });
    }
    let (q, r) = (n / r0, n % r0);
    Ok((0..r0).map(|i| q + usize::from(i < r)).collect())
}

/// Vertex blocks of [`disjoint_cliques`]: `⌊n/size⌋` blocks of `size`,
/// leftover vertices dealt round-robin to the first blocks.
pub fn clique_blocks(n: usize, clique_size: usize) -> Result<Vec<VertexSet>, GeneratorError> {
    if clique_size == 0 {
        return Err(GeneratorError::ZeroCliqueSize);
    }
    if clique_size > n {
        return Err(GeneratorError::CliqueLargerThanGraph { size: clique_size, n });
    }
    let t = n / clique_size;
    let sizes = nearly_equal_parts(n, t)?;
    let mut start = 0;
    Ok(sizes
        .into_iter()
        .map(|s| {
            let block = VertexSet::from_sorted_unchecked((start..start + s).collect());
            start += s;
            block
        })
        .collect())
}

/// Disjoint union of cliques, each of size at least `clique_size`.
pub fn disjoint_cliques(n: usize, clique_size: usize) -> Result<Graph, GeneratorError> {
    let blocks = clique_blocks(n, clique_size)?;
    Ok(union_of_cliques(n, &blocks))
}

fn union_of_cliques(n: usize, blocks: &[VertexSet]) -> Graph {
    let mut edges = Vec::new();
    for block in blocks {
        let ids = block.as_slice();
        for (i, &u) in ids.iter().enumerate() {
            for &v in &ids[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("block ids are in range")
}

/// `K_{⌊n/2⌋} ∪ K_{⌈n/2⌉}` with no edges between the halves.
pub fn two_cliques(n: usize) -> Result<Graph, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::TooFewVertices { n, min: 2 });
    }
    let half = n / 2;
    let blocks = [
        VertexSet::from_sorted_unchecked((0..half).collect()),
        VertexSet::from_sorted_unchecked((half..n).collect()),
    ];
    Ok(union_of_cliques(n, &blocks))
}

/// Binomial random graph: each pair independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: SeedSpec) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::InvalidProbability { p });
    }
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Edge probability used inside each block of [`blocked_gnp`]: `2d + n^{-1/3}`.
pub fn blocked_gnp_probability(n: usize, d: &DensityParam) -> f64 {
    2.0 * d.as_f64() + (n as f64).powf(-1.0 / 3.0)
}

/// Two independent binomial random graphs on `⌊n/2⌋` and `⌈n/2⌉`
/// vertices, redrawn until the minimum degree is at least `⌈dn⌉`.
pub fn blocked_gnp(n: usize, d: &DensityParam, seed: SeedSpec) -> Result<Graph, GeneratorError> {
    blocked_gnp_with_attempts(n, d, seed, DEFAULT_BLOCKED_GNP_ATTEMPTS)
}

pub fn blocked_gnp_with_attempts(
    n: usize,
    d: &DensityParam,
    seed: SeedSpec,
    max_attempts: usize,
) -> Result<Graph, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::TooFewVertices { n, min: 2 });
    }
    let p = blocked_gnp_probability(n, d);
    if p > 1.0 {
        return Err(GeneratorError::InvalidProbability { p });
    }
    let required = d.min_degree_for(n);
    let half = n / 2;
    let mut rng = seed.rng();
    for _ in 0..max_attempts {
        let mut edges = Vec::new();
        for (lo, hi) in [(0, half), (half, n)] {
            for u in lo..hi {
                for v in u + 1..hi {
                    if rng.random::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.min_degree()? >= required {
            return Ok(g);
        }
    }
    Err(GeneratorError::RetriesExhausted {
        attempts: max_attempts,
        required,
    })
}

/// Uniformly random graph with exactly `m` edges.
pub fn gnm(n: usize, m: usize, seed: SeedSpec) -> Result<Graph, GeneratorError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GeneratorError::TooManyEdges { m, max });
    }
    let pairs = Graph::empty(n).non_edges();
    let mut rng = seed.rng();
    let edges: Vec<_> = partial_fisher_yates(pairs.len(), m, &mut rng)
        .into_iter()
        .map(|i| pairs[i])
        .collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// A graph on which the partition's connectivity bound is tight up to
/// constants, together with its building blocks.
#[derive(Debug, Clone)]
pub struct TightnessConstruction {
    pub graph: Graph,
    /// Disjoint `(k+1)`-cliques, consecutive ids.
    pub cliques: Vec<VertexSet>,
    /// Independent set holding the remaining vertices (the last ids).
    pub independent: VertexSet,
    /// Neighbors each independent vertex receives in every clique.
    pub links_per_clique: usize,
}

pub fn mader_tightness_graph(n: usize, k: usize, seed: SeedSpec) -> Result<Graph, GeneratorError> {
    Ok(mader_tightness_construction(n, k, seed)?.graph)
}

/// `t` disjoint cliques of size `k+1`, an independent set `I` on the
/// remaining vertices, and every `I`-vertex joined to `⌈k²/n⌉`
/// seeded-random vertices of every clique.
///
/// `t = ⌈(n − k²/n)/(k+1)⌉`, capped at `⌊n/(k+1)⌋` so the cliques fit.
pub fn mader_tightness_construction(
    n: usize,
    k: usize,
    seed: SeedSpec,
) -> Result<TightnessConstruction, GeneratorError> {
    let invalid = |reason: &str| GeneratorError::InvalidTightnessParams {
        n,
        k,
        reason: reason.to_string(),
    };
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    if k + 1 > n {
        return Err(invalid("need k + 1 <= n"));
    }
    let size = k + 1;
    // ⌈(n² − k²) / (n(k+1))⌉
    let wanted = (n * n - k * k).div_ceil(n * size);
    let t = wanted.min(n / size);
    let isolated = n - t * size;
    if isolated * n > k * k + k * n {
        return Err(invalid("independent set exceeds k²/n + k"));
    }
    let links = (k * k).div_ceil(n);
    let cliques: Vec<VertexSet> = (0..t)
        .map(|i| VertexSet::from_sorted_unchecked((i * size..(i + 1) * size).collect()))
        .collect();
    let independent = VertexSet::from_sorted_unchecked((t * size..n).collect());

    let mut edges = Vec::new();
    for clique in &cliques {
        let ids = clique.as_slice();
        for (i, &u) in ids.iter().enumerate() {
            for &v in &ids[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    let mut rng = seed.rng();
    for x in independent.iter() {
        for clique in &cliques {
            for j in partial_fisher_yates(size, links, &mut rng) {
                edges.push((clique.as_slice()[j], x));
            }
        }
    }
    let graph = Graph::from_edges(n, &edges)?;
    Ok(TightnessConstruction {
        graph,
        cliques,
        independent,
        links_per_clique: links,
    })
}

/// A named base-graph family with keyword parameters, as used by sweep
/// configs and the command line (`family=two_cliques n=200`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum GeneratorSpec {
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Petersen,
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    /// Complete multipartite graph on `nearly_equal_parts(n, r0)`.
    Turan {
        n: usize,
        r0: usize,
    },
    DisjointCliques {
        n: usize,
        clique_size: usize,
    },
    TwoCliques {
        n: usize,
    },
    BlockedGnp {
        n: usize,
        d: DensityParam,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<SeedSpec>,
    },
    Gnp {
        n: usize,
        p: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<SeedSpec>,
    },
    Gnm {
        n: usize,
        m: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<SeedSpec>,
    },
    MaderTightness {
        n: usize,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<SeedSpec>,
    },
    EdgeList {
        path: PathBuf,
    },
}

impl GeneratorSpec {
    /// Builds the graph. Seeded families without an explicit seed draw
    /// from `fallback`.
    pub fn build(&self, fallback: SeedSpec) -> Result<Graph, GeneratorError> {
        use GeneratorSpec::*;
        match self {
            Complete { n } => Ok(complete(*n)),
            Empty { n } => Ok(Graph::empty(*n)),
            Cycle { n } => cycle(*n),
            Path { n } => Ok(path(*n)),
            Petersen => Ok(petersen()),
            CompleteMultipartite { parts } => complete_multipartite(parts),
            Turan { n, r0 } => complete_multipartite(&nearly_equal_parts(*n, *r0)?),
            DisjointCliques { n, clique_size } => disjoint_cliques(*n, *clique_size),
            TwoCliques { n } => two_cliques(*n),
            BlockedGnp { n, d, seed } => blocked_gnp(*n, d, seed.unwrap_or(fallback)),
            Gnp { n, p, seed } => gnp(*n, *p, seed.unwrap_or(fallback)),
            Gnm { n, m, seed } => gnm(*n, *m, seed.unwrap_or(fallback)),
            MaderTightness { n, k, seed } => mader_tightness_graph(*n, *k, seed.unwrap_or(fallback)),
            EdgeList { path } => {
                let file = std::fs::File::open(path).map_err(|e| GraphError::Io(format!("{}: {e}", path.display())))?;
                Ok(read_edge_list(std::io::BufReader::new(file))?)
            }
        }
    }

    pub fn family(&self) -> &'static str {
        use GeneratorSpec::*;
        match self {
            Complete { .. } => "complete",
            Empty { .. } => "empty",
            Cycle { .. } => "cycle",
            Path { .. } => "path",
            Petersen => "petersen",
            CompleteMultipartite { .. } => "complete_multipartite",
            Turan { .. } => "turan",
            DisjointCliques { .. } => "disjoint_cliques",
            TwoCliques { .. } => "two_cliques",
            BlockedGnp { .. } => "blocked_gnp",
            Gnp { .. } => "gnp",
            Gnm { .. } => "gnm",
            MaderTightness { .. } => "mader_tightness",
            EdgeList { .. } => "edge_list",
        }
    }

    /// Parses `key=value` words such as `["family=two_cliques", "n=200"]`.
    /// Values that parse as JSON numbers stay numbers; comma lists become
    /// arrays; `seed=S` becomes a seed spec on stream 0.
    pub fn from_key_values<S: AsRef<str>>(words: &[S]) -> Result<Self, GeneratorError> {
        let mut map = serde_json::Map::new();
        for word in words {
            let word = word.as_ref();
            let (key, value) = word
                .split_once('=')
                .ok_or_else(|| GeneratorError::BadParams(format!("expected key=value, got `{word}`")))?;
            let value = match key {
                "family" | "path" | "d" => serde_json::Value::String(value.to_string()),
                "seed" => {
                    let seed: u64 = value
                        .parse()
                        .map_err(|_| GeneratorError::BadParams(format!("bad seed `{value}`")))?;
                    serde_json::json!({ "seed": seed, "stream_id": 0 })
                }
                "parts" => serde_json::Value::Array(
                    value
                        .split(',')
                        .map(|s| {
                            s.trim()
                                .parse::<u64>()
                                .map(serde_json::Value::from)
                                .map_err(|_| GeneratorError::BadParams(format!("bad part size `{s}`")))
                        })
                        .collect::<Result<_, _>>()?,
                ),
                _ => serde_json::from_str(value).unwrap_or_else(|_| serde_json::Value::String(value.to_string())),
            };
            map.insert(key.to_string(), value);
        }
        if !map.contains_key("family") {
            return Err(GeneratorError::BadParams("missing family=<name>".into()));
        }
        serde_json::from_value(serde_json::Value::Object(map)).map_err(|e| {
            let msg = e.to_string();
            if msg.contains("unknown variant") {
                GeneratorError::UnknownFamily(msg)
            } else {
                GeneratorError::BadParams(msg)
            }
        })
    }
}
