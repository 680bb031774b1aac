//! Cliques: maximum clique by branch and bound with a greedy-colouring
//! bound, plus a separate early-exit `K_r` search and an exact `K_r` count.

use super::verdict::{Budget, PropertyVerdict, Ticker, Witness};
use super::CheckError;
use crate::bits;
use crate::graph::Graph;

/// Size of a maximum clique and one clique attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxClique {
    pub size: usize,
    pub vertices: Vec<usize>,
}

pub fn clique_number(g: &Graph) -> MaxClique {
    clique_number_within(g, &Budget::unlimited()).expect("unlimited budget never expires")
}

pub fn clique_number_within(g: &Graph, budget: &Budget) -> Result<MaxClique, CheckError> {
    let n = g.n();
    if n == 0 {
        return Ok(MaxClique {
            size: 0,
            vertices: Vec::new(),
        });
    }
    // Relabel by non-increasing degree: the colouring bound is tighter
    // when high-degree vertices are coloured first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let words = bits::words_for(n);
    let mut rows = vec![0u64; n * words];
    for (i, &v) in order.iter().enumerate() {
        for &w in g.neighbors(v) {
            bits::set(&mut rows[i * words..(i + 1) * words], position[w]);
        }
    }
    let mut search = MaxCliqueSearch {
        rows,
        words,
        best: vec![0],
        current: Vec::new(),
        ticker: Ticker::new(budget),
        interrupted: false,
    };
    search.expand(bits::full(n));
    if search.interrupted {
        return Err(CheckError::Interrupted);
    }
    let mut vertices: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    vertices.sort_unstable();
    Ok(MaxClique {
        size: vertices.len(),
        vertices,
    })
}

struct MaxCliqueSearch<'a> {
    rows: Vec<u64>,
    words: usize,
    best: Vec<usize>,
    current: Vec<usize>,
    ticker: Ticker<'a>,
    interrupted: bool,
}

impl MaxCliqueSearch<'_> {
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Greedy sequential colouring of `candidates`; returns vertices in
    /// colour order with the colour number (1-based) of each.
    fn colour_sort(&self, candidates: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = candidates.to_vec();
        let mut order = Vec::new();
        let mut colour = Vec::new();
        let mut k = 0;
        while !bits::is_empty(&uncoloured) {
            k += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = bits::first(&available) {
                bits::clear(&mut available, v);
                bits::clear(&mut uncoloured, v);
                bits::and_not_assign(&mut available, self.row(v));
                order.push(v);
                colour.push(k);
            }
        }
        (order, colour)
    }

    fn expand(&mut self, mut candidates: Vec<u64>) {
        if self.ticker.tick() {
            self.interrupted = true;
        }
        if self.interrupted {
            return;
        }
        let (order, colour) = self.colour_sort(&candidates);
        for i in (0..order.len()).rev() {
            if self.current.len() + colour[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            let mut next = candidates.clone();
            bits::and_assign(&mut next, self.row(v));
            self.current.push(v);
            if bits::is_empty(&next) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            if self.interrupted {
                return;
            }
            bits::clear(&mut candidates, v);
        }
    }
}

/// Does `g` contain a clique on `r` vertices? Depth-limited search that
/// stops at the first `K_r` found.
pub fn contains_kr(g: &Graph, r: usize) -> PropertyVerdict {
    contains_kr_within(g, r, &Budget::unlimited()).expect("unlimited budget never expires")
}

pub fn contains_kr_within(g: &Graph, r: usize, budget: &Budget) -> Result<PropertyVerdict, CheckError> {
    if r == 0 {
        return Ok(PropertyVerdict::yes(Some(Witness::Clique { vertices: vec![] })));
    }
    let mut ticker = Ticker::new(budget);
    let mut stack = Vec::with_capacity(r);
    match find_kr(g, r, bits::full(g.n()), &mut stack, &mut ticker) {
        Some(true) => {
            stack.sort_unstable();
            Ok(PropertyVerdict::yes(Some(Witness::Clique { vertices: stack })))
        }
        Some(false) => Ok(PropertyVerdict::no(None)),
        None => Err(CheckError::Interrupted),
    }
}

fn find_kr(g: &Graph, r: usize, mut candidates: Vec<u64>, stack: &mut Vec<usize>, ticker: &mut Ticker) -> Option<bool> {
    if stack.len() == r {
        return Some(true);
    }
    while let Some(v) = bits::first(&candidates) {
        if ticker.tick() {
            return None;
        }
        if bits::count(&candidates) < r - stack.len() {
            return Some(false);
        }
        bits::clear(&mut candidates, v);
        let mut next = candidates.clone();
        bits::and_assign(&mut next, g.row(v));
        if bits::count(&next) + 1 >= r - stack.len() {
            stack.push(v);
            if find_kr(g, r, next, stack, ticker)? {
                return Some(true);
            }
            stack.pop();
        }
    }
    Some(false)
}

/// Number of `r`-vertex cliques.
pub fn count_kr(g: &Graph, r: usize) -> u64 {
    count_kr_within(g, r, &Budget::unlimited()).expect("unlimited budget never expires")
}

pub fn count_kr_within(g: &Graph, r: usize, budget: &Budget) -> Result<u64, CheckError> {
    match r {
        0 => return Ok(1),
        1 => return Ok(g.n() as u64),
        2 => return Ok(g.edge_count() as u64),
        _ => {}
    }
    let mut ticker = Ticker::new(budget);
    count_from(g, r - 1, bits::full(g.n()), &mut ticker).ok_or(CheckError::Interrupted)
}

/// Cliques of size `remaining + 1` whose vertices all lie in `candidates`,
/// counted by their smallest vertex.
fn count_from(g: &Graph, remaining: usize, mut candidates: Vec<u64>, ticker: &mut Ticker) -> Option<u64> {
    let mut total = 0u64;
    while let Some(v) = bits::first(&candidates) {
        if ticker.tick() {
            return None;
        }
        bits::clear(&mut candidates, v);
        if remaining == 1 {
            total += bits::and_count(&candidates, g.row(v)) as u64;
            continue;
        }
        let mut next = candidates.clone();
        bits::and_assign(&mut next, g.row(v));
        if bits::count(&next) >= remaining {
            total += count_from(g, remaining - 1, next, ticker)?;
        }
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::verify_clique;
    use crate::generators::{complete, complete_multipartite, cycle, petersen};
    use std::time::Duration;

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&complete(6)).size, 6);
        let g = complete_multipartite(&[3, 3, 3]).unwrap();
        let c = clique_number(&g);
        assert_eq!(c.size, 3);
        assert!(verify_clique(&g, &c.vertices));
        assert_eq!(clique_number(&petersen()).size, 2);
        assert_eq!(clique_number(&Graph::empty(3)).size, 1);
        assert_eq!(clique_number(&Graph::empty(0)).size, 0);
    }

    #[test]
    fn contains_kr_examples() {
        assert!(!contains_kr(&cycle(5).unwrap(), 3).holds);
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        let v = contains_kr(&g, 3);
        assert!(v.holds);
        match v.witness {
            Some(Witness::Clique { vertices }) => {
                assert!(verify_clique(&g, &vertices));
                let parts: Vec<_> = vertices.iter().map(|v| v / 2).collect();
                assert_eq!(parts, vec![0, 1, 2]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(contains_kr(&complete(4), 4).holds);
        assert!(!contains_kr(&complete(4), 5).holds);
        assert!(contains_kr(&Graph::empty(1), 1).holds);
        assert!(!contains_kr(&Graph::empty(0), 1).holds);
    }

    #[test]
    fn bipartite_plus_triangle_free_parts_has_no_k5() {
        // K_{10,10} plus a 5-cycle inside each part: no triangle inside a
        // part, so the largest clique is 2·(3 − 1) = 4.
        let mut edges: Vec<(usize, usize)> = complete_multipartite(&[10, 10]).unwrap().edges().collect();
        for base in [0, 10] {
            for i in 0..5 {
                edges.push((base + i, base + (i + 1) % 5));
            }
        }
        let g = Graph::from_edges(20, &edges).unwrap();
        assert!(!contains_kr(&g, 5).holds);
        assert_eq!(clique_number(&g).size, 4);
    }

    #[test]
    fn count_kr_examples() {
        assert_eq!(count_kr(&complete(5), 3), 10);
        assert_eq!(count_kr(&cycle(5).unwrap(), 3), 0);
        assert_eq!(count_kr(&complete_multipartite(&[2, 2, 2]).unwrap(), 3), 8);
        assert_eq!(count_kr(&complete(7), 4), 35);
        assert_eq!(count_kr(&complete(7), 7), 1);
        assert_eq!(count_kr(&complete(7), 8), 0);
        assert_eq!(count_kr(&petersen(), 2), 15);
    }

    #[test]
    fn expired_budget_interrupts() {
        let g = crate::generators::gnp(200, 0.9, crate::SeedSpec::from_seed(1)).unwrap();
        let budget = Budget::with_timeout(Duration::from_millis(0));
        assert_eq!(clique_number_within(&g, &budget), Err(CheckError::Interrupted));
    }
}
