//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! contraction) and the perfect-matching predicate.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched pairs as `(min, max)`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub saturated: Vec<bool>,
    pub is_perfect: bool,
}

impl MatchingResult {
    pub fn cardinality(&self) -> usize {
        self.edges.len()
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let mut mate = vec![NONE; n];
        // greedy start; the search only has to fix what this misses
        for (u, v) in g.edges() {
            if mate[u] == NONE && mate[v] == NONE {
                mate[u] = v;
                mate[v] = u;
            }
        }
        Blossom {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.parent[u];
            let ppv = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for v in 0..self.g.order() {
            if self.mate[v] == NONE && self.g.degree(v) > 0 {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

pub fn maximum_matching(g: &Graph) -> MatchingResult {
    let mate = Blossom::new(g).run();
    let edges: Vec<(usize, usize)> = (0..mate.len())
        .filter(|&u| mate[u] != NONE && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect();
    let saturated: Vec<bool> = mate.iter().map(|&m| m != NONE).collect();
    let is_perfect = saturated.iter().all(|&s| s);
    MatchingResult {
        edges,
        saturated,
        is_perfect,
    }
}

/// Whether `g` is conjugated, i.e. has a perfect matching.
pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.order();
    if n % 2 == 1 || (0..n).any(|v| g.degree(v) == 0) {
        return false;
    }
    maximum_matching(g).is_perfect
}
