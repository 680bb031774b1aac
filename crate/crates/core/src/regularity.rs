//! Exhaustive ε-regularity checks for small bipartite pairs and exact
//! counts of the `k`-tuples that violate the union and intersection
//! bounds for regular pairs.
//!
//! All densities and thresholds are exact rationals. Powers such as
//! `(1 − δ + ε)^k` go through [`BigRational`] to avoid overflow.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{serialize_ratio, Graph, VertexSet};

/// Largest side accepted by the exhaustive regularity scan by default.
pub const DEFAULT_SUBSET_CAP: usize = 16;
/// Largest `|A|^k` enumerated by the tuple counters by default.
pub const DEFAULT_TUPLE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularityError {
    #[error("vertex sets must be non-empty")]
    EmptySet,
    #[error("vertex sets overlap at {v}")]
    Overlap { v: usize },
    #[error("vertex {v} out of range for n = {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("set of size {size} exceeds the exhaustive cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("{count} tuples exceed the enumeration budget {budget}")]
    TupleBudget { count: u128, budget: u64 },
    #[error("Y must be a non-empty subset of B")]
    BadY,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
}

/// `ε`, `δ` and the tuple length `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityParams {
    #[serde(serialize_with = "serialize_ratio")]
    pub eps: Ratio<i64>,
    #[serde(serialize_with = "serialize_ratio")]
    pub delta: Ratio<i64>,
    pub k: usize,
}

impl RegularityParams {
    pub fn new(eps: Ratio<i64>, delta: Ratio<i64>, k: usize) -> Result<Self, RegularityError> {
        let unit = |r: Ratio<i64>| r > Ratio::zero() && r < Ratio::one();
        if !unit(eps) || !unit(delta) {
            return Err(RegularityError::InvalidParams(format!(
                "eps = {eps} and delta = {delta} must lie in (0, 1)"
            )));
        }
        if k == 0 {
            return Err(RegularityError::InvalidParams("k must be at least 1".into()));
        }
        Ok(RegularityParams { eps, delta, k })
    }

    /// `k·ε·|A|^k`, the bound both violation counts are compared against.
    pub fn violation_bound(&self, a_size: usize) -> BigRational {
        big(self.eps) * BigRational::from_integer(BigInt::from(self.k) * BigInt::from(a_size).pow(self.k as u32))
    }
}

fn big(r: Ratio<i64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn check_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<(), RegularityError> {
    if a.is_empty() || b.is_empty() {
        return Err(RegularityError::EmptySet);
    }
    let n = g.n();
    if let Some(v) = a.iter().chain(b.iter()).find(|&v| v >= n) {
        return Err(RegularityError::OutOfRange { v, n });
    }
    if let Some(v) = a.iter().find(|&v| b.contains(v)) {
        return Err(RegularityError::Overlap { v });
    }
    Ok(())
}

/// `d(A, B) = e(A, B) / (|A||B|)`.
pub fn pair_density(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Ratio<i64>, RegularityError> {
    check_pair(g, a, b)?;
    Ok(Ratio::new(g.cross_edge_count(a, b) as i64, (a.len() * b.len()) as i64))
}

/// A pair `(X, Y)` with `|X| > ε|A|`, `|Y| > ε|B|` and `|d(X,Y) − d(A,B)| ≥ ε`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub x: VertexSet,
    pub y: VertexSet,
    #[serde(serialize_with = "serialize_ratio")]
    pub density: Ratio<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularPairReport {
    #[serde(serialize_with = "serialize_ratio")]
    pub density: Ratio<i64>,
    pub is_regular: bool,
    pub violating_pair: Option<Violation>,
    /// Tuple counts, filled in by [`analyze_pair`].
    pub union_bad_tuples: Option<u64>,
    pub intersection_bad_tuples: Option<u64>,
}

/// Smallest size strictly above `eps·len`.
fn min_size_above(eps: Ratio<i64>, len: usize) -> usize {
    (eps * Ratio::from_integer(len as i64)).floor().to_integer() as usize + 1
}

pub fn is_eps_regular_exact(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: Ratio<i64>,
) -> Result<RegularPairReport, RegularityError> {
    is_eps_regular_exact_with_cap(g, a, b, eps, DEFAULT_SUBSET_CAP)
}

/// Exhaustive ε-regularity test.
///
/// Every `Y ⊆ B` with `|Y| > ε|B|` is visited in increasing bitmask order
/// (bit `j` is the `j`-th smallest vertex of `B`). For a fixed `Y` and size
/// `s`, the values `e(X, Y)` over `|X| = s` fill the whole integer range
/// between the sums of the `s` smallest and `s` largest degrees into `Y`,
/// so testing those two extremes decides whether any `X` violates. The
/// first violation in (Y, s, low side before high side) order is returned.
pub fn is_eps_regular_exact_with_cap(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: Ratio<i64>,
    cap: usize,
) -> Result<RegularPairReport, RegularityError> {
    check_pair(g, a, b)?;
    if eps <= Ratio::zero() || eps >= Ratio::one() {
        return Err(RegularityError::InvalidParams(format!(
            "eps = {eps} must lie in (0, 1)"
        )));
    }
    // subsets are enumerated as u32 bitmasks
    let cap = cap.min(31);
    for set in [a, b] {
        if set.len() > cap {
            return Err(RegularityError::TooLarge { size: set.len(), cap });
        }
    }
    let density = pair_density(g, a, b)?;
    let (na, nb) = (a.len(), b.len());
    let min_x = min_size_above(eps, na);
    let min_y = min_size_above(eps, nb);
    // neighbourhoods of A as bitmasks over B's positions
    let masks: Vec<u32> = a
        .iter()
        .map(|x| {
            b.iter()
                .enumerate()
                .filter(|&(_, y)| g.has_edge(x, y))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let mut order: Vec<usize> = (0..na).collect();
    let mut weights = vec![0i64; na];
    for y_mask in 0u32..(1u32 << nb) {
        let y_size = y_mask.count_ones() as usize;
        if y_size < min_y {
            continue;
        }
        for (w, m) in weights.iter_mut().zip(&masks) {
            *w = (m & y_mask).count_ones() as i64;
        }
        order.sort_by_key(|&i| (weights[i], i));
        let mut low = 0i64;
        let mut high = 0i64;
        for s in 1..=na {
            low += weights[order[s - 1]];
            high += weights[order[na - s]];
            if s < min_x {
                continue;
            }
            let denom = (s * y_size) as i64;
            for (sum, from_low) in [(low, true), (high, false)] {
                let d = Ratio::new(sum, denom);
                if (d - density).abs() >= eps {
                    let picked: Vec<usize> = if from_low {
                        order[..s].to_vec()
                    } else {
                        order[na - s..].to_vec()
                    };
                    let mut x: Vec<usize> = picked.iter().map(|&i| a.as_slice()[i]).collect();
                    x.sort_unstable();
                    let y: Vec<usize> = (0..nb)
                        .filter(|j| y_mask >> j & 1 == 1)
                        .map(|j| b.as_slice()[j])
                        .collect();
                    return Ok(RegularPairReport {
                        density,
                        is_regular: false,
                        violating_pair: Some(Violation {
                            x: VertexSet::from_sorted_unchecked(x),
                            y: VertexSet::from_sorted_unchecked(y),
                            density: d,
                        }),
                        union_bad_tuples: None,
                        intersection_bad_tuples: None,
                    });
                }
            }
        }
    }
    Ok(RegularPairReport {
        density,
        is_regular: true,
        violating_pair: None,
        union_bad_tuples: None,
        intersection_bad_tuples: None,
    })
}

/// Neighbourhoods of `A` inside `target` as bit sets over `target` positions.
fn neighbourhoods(g: &Graph, a: &VertexSet, target: &VertexSet) -> Vec<Vec<u64>> {
    let words = target.len().div_ceil(64);
    a.iter()
        .map(|x| {
            let mut row = vec![0u64; words];
            for (j, y) in target.iter().enumerate() {
                if g.has_edge(x, y) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect()
}

fn check_budget(a_size: usize, k: usize, budget: u64) -> Result<(), RegularityError> {
    let count = (a_size as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > budget as u128 {
        return Err(RegularityError::TupleBudget { count, budget });
    }
    Ok(())
}

/// Counts ordered tuples `(x_1..x_k) ∈ A^k` whose combined set (union or
/// intersection of neighbourhoods) has at most `limit` elements.
fn count_tuples(rows: &[Vec<u64>], k: usize, union: bool, limit: &BigRational) -> u64 {
    // |S| ≤ limit  ⇔  |S| ≤ ⌊limit⌋, and nothing qualifies when limit < 0
    if limit.is_negative() {
        return 0;
    }
    let limit = limit.floor().to_integer();
    let limit: usize = limit.try_into().unwrap_or(usize::MAX);
    let words = rows.first().map_or(0, Vec::len);
    let start = if union {
        vec![0u64; words]
    } else {
        vec![u64::MAX; words]
    };
    fn go(rows: &[Vec<u64>], depth: usize, acc: &[u64], union: bool, limit: usize) -> u64 {
        if depth == 0 {
            let size: usize = acc.iter().map(|w| w.count_ones() as usize).sum();
            return u64::from(size <= limit);
        }
        let mut next = vec![0u64; acc.len()];
        let mut total = 0;
        for row in rows {
            for ((n, a), r) in next.iter_mut().zip(acc).zip(row) {
                *n = if union { a | r } else { a & r };
            }
            total += go(rows, depth - 1, &next, union, limit);
        }
        total
    }
    go(rows, k, &start, union, limit)
}

fn union_limit(params: &RegularityParams, b_size: usize) -> BigRational {
    let base = BigRational::one() - big(params.delta) + big(params.eps);
    (BigRational::one() - base.pow(params.k as i32)) * BigRational::from_integer(BigInt::from(b_size))
}

fn intersection_limit(params: &RegularityParams, y_size: usize) -> BigRational {
    (big(params.delta) - big(params.eps)).pow(params.k as i32) * BigRational::from_integer(BigInt::from(y_size))
}

/// Number of `k`-tuples of `A` with `|∪ N(x_i) ∩ B| ≤ (1 − (1−δ+ε)^k)|B|`,
/// without checking the hypotheses under which that number is small.
pub fn count_union_violations_unchecked(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    params: &RegularityParams,
    budget: u64,
) -> Result<u64, RegularityError> {
    check_pair(g, a, b)?;
    check_budget(a.len(), params.k, budget)?;
    let rows = neighbourhoods(g, a, b);
    Ok(count_tuples(&rows, params.k, true, &union_limit(params, b.len())))
}

/// Number of `k`-tuples of `A` with `|∩ N(x_i) ∩ Y| ≤ (δ−ε)^k|Y|`, without
/// checking hypotheses. `δ − ε` may be negative, in which case the power
/// is taken as is.
pub fn count_intersection_violations_unchecked(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    y: &VertexSet,
    params: &RegularityParams,
    budget: u64,
) -> Result<u64, RegularityError> {
    check_pair(g, a, b)?;
    if y.is_empty() || !y.iter().all(|v| b.contains(v)) {
        return Err(RegularityError::BadY);
    }
    check_budget(a.len(), params.k, budget)?;
    let rows = neighbourhoods(g, a, y);
    Ok(count_tuples(
        &rows,
        params.k,
        false,
        &intersection_limit(params, y.len()),
    ))
}

/// Shared hypotheses: `ε < δ`, `(A, B)` ε-regular and `d(A, B) ≥ δ`.
fn require_regular_pair(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    params: &RegularityParams,
) -> Result<(), RegularityError> {
    if params.eps >= params.delta {
        return Err(RegularityError::Hypothesis(format!(
            "eps = {} must be below delta = {}",
            params.eps, params.delta
        )));
    }
    let report = is_eps_regular_exact(g, a, b, params.eps)?;
    if !report.is_regular {
        return Err(RegularityError::Hypothesis("pair is not eps-regular".into()));
    }
    if report.density < params.delta {
        return Err(RegularityError::Hypothesis(format!(
            "density {} is below delta = {}",
            report.density, params.delta
        )));
    }
    Ok(())
}

/// Union count under its hypotheses: regular pair of density `≥ δ`,
/// `ε < δ` and `(1 − δ + ε)^{k−1} ≥ ε`. The count is then at most `kε|A|^k`.
pub fn count_union_violations(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    params: &RegularityParams,
) -> Result<u64, RegularityError> {
    require_regular_pair(g, a, b, params)?;
    let base = BigRational::one() - big(params.delta) + big(params.eps);
    if base.pow(params.k as i32 - 1) < big(params.eps) {
        return Err(RegularityError::Hypothesis("(1 - delta + eps)^(k-1) < eps".into()));
    }
    count_union_violations_unchecked(g, a, b, params, DEFAULT_TUPLE_BUDGET)
}

/// Intersection count under its hypotheses: regular pair of density `≥ δ`,
/// `ε < δ`, `Y ⊆ B` and `(δ − ε)^{k−1}|Y| > ε|B|`. The count is then at
/// most `kε|A|^k`.
pub fn count_intersection_violations(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    y: &VertexSet,
    params: &RegularityParams,
) -> Result<u64, RegularityError> {
    require_regular_pair(g, a, b, params)?;
    let lhs = (big(params.delta) - big(params.eps)).pow(params.k as i32 - 1)
        * BigRational::from_integer(BigInt::from(y.len()));
    let rhs = big(params.eps) * BigRational::from_integer(BigInt::from(b.len()));
    if lhs <= rhs {
        return Err(RegularityError::Hypothesis("(delta - eps)^(k-1)|Y| <= eps|B|".into()));
    }
    count_intersection_violations_unchecked(g, a, b, y, params, DEFAULT_TUPLE_BUDGET)
}

/// Full report for a pair: exhaustive regularity verdict at `ε` plus both
/// raw tuple counts with `Y = B`.
pub fn analyze_pair(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    params: &RegularityParams,
) -> Result<RegularPairReport, RegularityError> {
    let mut report = is_eps_regular_exact(g, a, b, params.eps)?;
    report.union_bad_tuples = Some(count_union_violations_unchecked(g, a, b, params, DEFAULT_TUPLE_BUDGET)?);
    report.intersection_bad_tuples = Some(count_intersection_violations_unchecked(
        g,
        a,
        b,
        b,
        params,
        DEFAULT_TUPLE_BUDGET,
    )?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete_multipartite;

    fn vs(ids: std::ops::Range<usize>) -> VertexSet {
        VertexSet::from_sorted_unchecked(ids.collect())
    }

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    /// Naive scan over all qualifying `(X, Y)`, for cross-checking.
    fn naive_regular(g: &Graph, a: &VertexSet, b: &VertexSet, eps: Ratio<i64>) -> bool {
        let d = pair_density(g, a, b).unwrap();
        let (na, nb) = (a.len(), b.len());
        for xm in 1u32..1 << na {
            if Ratio::from_integer(xm.count_ones() as i64) <= eps * Ratio::from_integer(na as i64) {
                continue;
            }
            for ym in 1u32..1 << nb {
                if Ratio::from_integer(ym.count_ones() as i64) <= eps * Ratio::from_integer(nb as i64) {
                    continue;
                }
                let mut e = 0;
                for i in 0..na {
                    for j in 0..nb {
                        if xm >> i & 1 == 1 && ym >> j & 1 == 1 && g.has_edge(a.as_slice()[i], b.as_slice()[j]) {
                            e += 1;
                        }
                    }
                }
                let dxy = Ratio::new(e, (xm.count_ones() * ym.count_ones()) as i64);
                if (dxy - d).abs() >= eps {
                    return false;
                }
            }
        }
        true
    }

    fn random_bipartite(size: usize, p: f64, seed: u64) -> Graph {
        use rand::Rng;
        let mut rng = crate::SeedSpec::from_seed(seed).rng();
        let mut edges = Vec::new();
        for i in 0..size {
            for j in 0..size {
                if rng.random::<f64>() < p {
                    edges.push((i, size + j));
                }
            }
        }
        Graph::from_edges(2 * size, &edges).unwrap()
    }

    #[test]
    fn densities() {
        let g = complete_multipartite(&[3, 4]).unwrap();
        assert_eq!(pair_density(&g, &vs(0..3), &vs(3..7)).unwrap(), r(1, 1));
        assert_eq!(pair_density(&Graph::empty(4), &vs(0..2), &vs(2..4)).unwrap(), r(0, 1));
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2)]).unwrap();
        assert_eq!(pair_density(&g, &vs(0..2), &vs(2..4)).unwrap(), r(3, 4));
        assert_eq!(pair_density(&g, &vs(2..4), &vs(0..2)).unwrap(), r(3, 4));
        assert_eq!(
            pair_density(&g, &vs(0..2), &vs(1..3)),
            Err(RegularityError::Overlap { v: 1 })
        );
        assert_eq!(pair_density(&g, &vs(0..0), &vs(1..3)), Err(RegularityError::EmptySet));
    }

    #[test]
    fn trivial_pairs_are_regular() {
        let g = complete_multipartite(&[5, 5]).unwrap();
        let empty = Graph::empty(10);
        for eps in [r(1, 10), r(1, 4), r(1, 2)] {
            assert!(is_eps_regular_exact(&g, &vs(0..5), &vs(5..10), eps).unwrap().is_regular);
            assert!(
                is_eps_regular_exact(&empty, &vs(0..5), &vs(5..10), eps)
                    .unwrap()
                    .is_regular
            );
        }
    }

    #[test]
    fn perfect_matching_regression() {
        // d = 1/4 and both sides need more than one vertex; the first Y in
        // scan order is {4, 5}, and X = {2, 3} misses it entirely.
        let g = Graph::from_edges(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let rep = is_eps_regular_exact(&g, &vs(0..4), &vs(4..8), r(1, 4)).unwrap();
        assert_eq!(rep.density, r(1, 4));
        assert!(!rep.is_regular);
        let v = rep.violating_pair.unwrap();
        assert!(v.x.len() > 1 && v.y.len() > 1);
        assert!((v.density - rep.density).abs() >= r(1, 4));
        assert_eq!(v.x.as_slice(), &[2, 3]);
        assert_eq!(v.y.as_slice(), &[4, 5]);
        assert_eq!(v.density, r(0, 1));
        assert!(!naive_regular(&g, &vs(0..4), &vs(4..8), r(1, 4)));
    }

    #[test]
    fn agrees_with_naive_scan() {
        for seed in 0..40 {
            let size = 3 + (seed as usize % 4);
            let g = random_bipartite(size, 0.5, seed);
            let (a, b) = (vs(0..size), vs(size..2 * size));
            for eps in [r(1, 5), r(1, 3), r(1, 2), r(2, 3)] {
                let fast = is_eps_regular_exact(&g, &a, &b, eps).unwrap();
                assert_eq!(fast.is_regular, naive_regular(&g, &a, &b, eps), "seed {seed} eps {eps}");
                if let Some(v) = &fast.violating_pair {
                    assert!(Ratio::from_integer(v.x.len() as i64) > eps * Ratio::from_integer(size as i64));
                    assert!(Ratio::from_integer(v.y.len() as i64) > eps * Ratio::from_integer(size as i64));
                    let e = g.cross_edge_count(&v.x, &v.y) as i64;
                    assert_eq!(v.density, Ratio::new(e, (v.x.len() * v.y.len()) as i64));
                    assert!((v.density - fast.density).abs() >= eps);
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(40);
        assert_eq!(
            is_eps_regular_exact(&g, &vs(0..17), &vs(17..20), r(1, 2)).unwrap_err(),
            RegularityError::TooLarge { size: 17, cap: 16 }
        );
    }

    #[test]
    fn complete_pair_has_no_bad_tuples() {
        let g = complete_multipartite(&[4, 4]).unwrap();
        let (a, b) = (vs(0..4), vs(4..8));
        let p = RegularityParams::new(r(1, 10), r(1, 2), 3).unwrap();
        assert_eq!(count_union_violations(&g, &a, &b, &p).unwrap(), 0);
        assert_eq!(count_intersection_violations(&g, &a, &b, &b, &p).unwrap(), 0);
    }

    #[test]
    fn base_case_counts_low_degree_vertices() {
        // k = 1: the union and intersection counts are the number of x
        // with |N(x) ∩ B| at most (δ−ε)|B|.
        let g = random_bipartite(8, 0.5, 3);
        let (a, b) = (vs(0..8), vs(8..16));
        let p = RegularityParams::new(r(1, 8), r(3, 8), 1).unwrap();
        let expected = a
            .iter()
            .filter(|&x| Ratio::from_integer(b.iter().filter(|&y| g.has_edge(x, y)).count() as i64) <= r(2, 8) * 8)
            .count() as u64;
        let u = count_union_violations_unchecked(&g, &a, &b, &p, DEFAULT_TUPLE_BUDGET).unwrap();
        let i = count_intersection_violations_unchecked(&g, &a, &b, &b, &p, DEFAULT_TUPLE_BUDGET).unwrap();
        assert_eq!(u, expected);
        assert_eq!(i, expected);
    }

    #[test]
    fn tuple_counts_match_direct_enumeration() {
        let g = random_bipartite(6, 0.5, 9);
        let (a, b) = (vs(0..6), vs(6..12));
        let p = RegularityParams::new(r(1, 5), r(1, 2), 2).unwrap();
        // union ≤ (1 − (7/10)²)·6 = 3.06, intersection ≤ (3/10)²·6 = 0.54
        let nb = |x: usize| -> Vec<usize> { b.iter().filter(|&y| g.has_edge(x, y)).collect() };
        let (mut union_bad, mut inter_bad) = (0, 0);
        for x1 in a.iter() {
            for x2 in a.iter() {
                let (n1, n2) = (nb(x1), nb(x2));
                let uni = b.iter().filter(|y| n1.contains(y) || n2.contains(y)).count();
                let int = b.iter().filter(|y| n1.contains(y) && n2.contains(y)).count();
                union_bad += u64::from(uni <= 3);
                inter_bad += u64::from(int == 0);
            }
        }
        assert_eq!(
            count_union_violations_unchecked(&g, &a, &b, &p, 100).unwrap(),
            union_bad
        );
        assert_eq!(
            count_intersection_violations_unchecked(&g, &a, &b, &b, &p, 100).unwrap(),
            inter_bad
        );
    }

    #[test]
    fn hypotheses_are_enforced() {
        let g = random_bipartite(10, 0.5, 1);
        let (a, b) = (vs(0..10), vs(10..20));
        let p = RegularityParams::new(r(9, 20), r(2, 5), 2).unwrap();
        assert!(matches!(
            count_union_violations(&g, &a, &b, &p),
            Err(RegularityError::Hypothesis(_))
        ));
        assert!(matches!(
            count_intersection_violations(&g, &a, &b, &b, &p),
            Err(RegularityError::Hypothesis(_))
        ));
        assert!(matches!(
            count_union_violations_unchecked(&g, &a, &b, &p, 99),
            Err(RegularityError::TupleBudget { count: 100, budget: 99 })
        ));
    }

    #[test]
    fn violation_bound_value() {
        let p = RegularityParams::new(r(9, 20), r(2, 5), 2).unwrap();
        assert_eq!(p.violation_bound(10), BigRational::from_integer(BigInt::from(90)));
    }
}
