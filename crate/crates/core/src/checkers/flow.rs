//! Dinic maximum flow on integer capacities, with an optional early stop
//! once the flow reaches a caller-supplied limit.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    original: i64,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    pub(crate) fn node_count(&self) -> usize {
        self.out.len()
    }

    /// Adds `from → to` with capacity `cap` (and its residual twin).
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, original: cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            original: 0,
        });
    }

    /// Restores every arc to its original capacity.
    pub(crate) fn reset(&mut self) {
        for a in &mut self.arcs {
            a.cap = a.original;
        }
    }

    /// Pushes flow from `s` to `t` until it is maximal or reaches `limit`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total < limit && self.build_levels(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.augment(s, t, limit - total);
                if pushed == 0 {
                    break;
                }
                total += pushed;
                if total >= limit {
                    break;
                }
            }
        }
        total
    }

    fn build_levels(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &ai in &self.out[u] {
                let a = &self.arcs[ai];
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[t] >= 0
    }

    /// One blocking-flow augmentation along level-increasing arcs,
    /// iterative to keep deep networks off the call stack.
    fn augment(&mut self, s: usize, t: usize, want: i64) -> i64 {
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let bottleneck = path.iter().map(|&ai| self.arcs[ai].cap).min().unwrap_or(0).min(want);
                for &ai in &path {
                    self.arcs[ai].cap -= bottleneck;
                    self.arcs[ai ^ 1].cap += bottleneck;
                }
                return bottleneck;
            }
            let mut advanced = false;
            while self.cursor[u] < self.out[u].len() {
                let ai = self.out[u][self.cursor[u]];
                let a = &self.arcs[ai];
                if a.cap > 0 && self.level[a.to] == self.level[u] + 1 {
                    path.push(ai);
                    u = a.to;
                    advanced = true;
                    break;
                }
                self.cursor[u] += 1;
            }
            if !advanced {
                if u == s {
                    return 0;
                }
                // dead end: retire the arc that led here
                self.level[u] = -1;
                let ai = path.pop().expect("non-source node has an incoming path arc");
                u = self.arcs[ai ^ 1].to;
                self.cursor[u] += 1;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &ai in &self.out[u] {
                let a = &self.arcs[ai];
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        // CLRS figure 26.1: max flow 23
        let mut f = FlowNetwork::new(6);
        for &(u, v, c) in &[
            (0, 1, 16),
            (0, 2, 13),
            (1, 3, 12),
            (2, 1, 4),
            (2, 4, 14),
            (3, 2, 9),
            (3, 5, 20),
            (4, 3, 7),
            (4, 5, 4),
        ] {
            f.add_arc(u, v, c);
        }
        assert_eq!(f.max_flow(0, 5, i64::MAX), 23);
        let reach = f.residual_reachable(0);
        assert!(reach[0] && !reach[5]);
        f.reset();
        assert_eq!(f.max_flow(0, 5, 10), 10);
    }
}
