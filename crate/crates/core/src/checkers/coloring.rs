//! Exact chromatic number by DSATUR branch and bound. The lower bound is a
//! maximum clique, which is pre-coloured `0..ω` to break colour symmetry;
//! the initial upper bound is a greedy DSATUR colouring.

use serde::Serialize;

use super::clique::clique_number_within;
use super::verdict::{Budget, Ticker};
use super::CheckError;
use crate::graph::Graph;

/// Largest graph accepted by [`chromatic_number`] by default.
pub const DEFAULT_CHROMATIC_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub chromatic_number: usize,
    /// `colors[v]` in `0..chromatic_number`; proper.
    pub colors: Vec<usize>,
}

pub fn chromatic_number(g: &Graph) -> Result<Coloring, CheckError> {
    chromatic_number_within(g, DEFAULT_CHROMATIC_CAP, &Budget::unlimited())
}

pub fn chromatic_number_within(g: &Graph, cap: usize, budget: &Budget) -> Result<Coloring, CheckError> {
    let n = g.n();
    if n > cap {
        return Err(CheckError::TooLarge { n, cap });
    }
    if n == 0 {
        return Ok(Coloring {
            chromatic_number: 0,
            colors: Vec::new(),
        });
    }
    let clique = clique_number_within(g, budget)?;
    let mut state = State::new(g);
    for (c, &v) in clique.vertices.iter().enumerate() {
        state.assign_in(g, v, c);
    }
    let greedy = greedy_dsatur(g, state.clone());
    let mut search = Search {
        g,
        best: greedy.iter().max().map_or(0, |&c| c + 1),
        best_colors: greedy,
        lower: clique.size,
        ticker: Ticker::new(budget),
        interrupted: false,
    };
    if search.best > search.lower {
        search.run(&mut state, clique.size);
    }
    if search.interrupted {
        return Err(CheckError::Interrupted);
    }
    Ok(Coloring {
        chromatic_number: search.best,
        colors: search.best_colors,
    })
}

const UNCOLORED: usize = usize::MAX;

#[derive(Clone)]
struct State {
    n: usize,
    colors: Vec<usize>,
    /// `neighbor_colors[v * n + c]`: neighbours of `v` holding colour `c`.
    neighbor_colors: Vec<u16>,
    saturation: Vec<usize>,
    uncolored_degree: Vec<usize>,
    remaining: usize,
}

impl State {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        State {
            n,
            colors: vec![UNCOLORED; n],
            neighbor_colors: vec![0; n * n],
            saturation: vec![0; n],
            uncolored_degree: (0..n).map(|v| g.degree(v)).collect(),
            remaining: n,
        }
    }

    fn available(&self, v: usize, c: usize) -> bool {
        self.neighbor_colors[v * self.n + c] == 0
    }

    fn assign_in(&mut self, g: &Graph, v: usize, c: usize) {
        self.colors[v] = c;
        self.remaining -= 1;
        for &w in g.neighbors(v) {
            let slot = &mut self.neighbor_colors[w * self.n + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
            self.uncolored_degree[w] -= 1;
        }
    }

    fn unassign_in(&mut self, g: &Graph, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        self.remaining += 1;
        for &w in g.neighbors(v) {
            let slot = &mut self.neighbor_colors[w * self.n + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
            self.uncolored_degree[w] += 1;
        }
    }

    /// Uncoloured vertex of maximum saturation, ties by uncoloured degree,
    /// then lowest id.
    fn pick(&self) -> Option<usize> {
        (0..self.n)
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.uncolored_degree[v], std::cmp::Reverse(v)))
    }
}

fn greedy_dsatur(g: &Graph, mut state: State) -> Vec<usize> {
    while let Some(v) = state.pick() {
        let c = (0..).find(|&c| state.available(v, c)).expect("some colour is free");
        state.assign_in(g, v, c);
    }
    state.colors
}

struct Search<'a, 'b> {
    g: &'a Graph,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
    ticker: Ticker<'b>,
    interrupted: bool,
}

impl Search<'_, '_> {
    fn run(&mut self, state: &mut State, used: usize) {
        if self.ticker.tick() {
            self.interrupted = true;
        }
        if self.interrupted || self.best == self.lower {
            return;
        }
        let Some(v) = state.pick() else {
            if used < self.best {
                self.best = used;
                self.best_colors = state.colors.clone();
            }
            return;
        };
        // colours 0..used, then one fresh colour if still below the bound
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if !state.available(v, c) {
                continue;
            }
            state.assign_in(self.g, v, c);
            self.run(state, used.max(c + 1));
            state.unassign_in(self.g, v);
            if self.interrupted || self.best == self.lower {
                return;
            }
        }
    }
}
