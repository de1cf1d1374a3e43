//! Simple undirected graphs on the dense vertex set `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Neighborhoods are also kept as `u64` bitmasks.
pub const MAX_ORDER: usize = 64;

/// An undirected simple graph with sorted adjacency lists.
///
/// Values are immutable once built; every constructor normalizes its input so
/// that the graph has no loops, no parallel edges and symmetric adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    masks: Vec<u64>,
    size: usize,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            adjacency: vec![Vec::new(); n],
            masks: vec![0; n],
            size: 0,
        })
    }

    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    /// A copy of `self` with `extra` edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = self.clone();
        for (u, v) in extra {
            g.insert_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.masks[u] & (1 << v) == 0 {
            self.masks[u] |= 1 << v;
            self.masks[v] |= 1 << u;
            self.adjacency[u].push(v);
            self.adjacency[v].push(u);
            self.size += 1;
        }
        Ok(())
    }

    fn finish(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Neighborhood of `v` as a bitmask over vertex labels.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.masks[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.masks[u] & (1 << v) != 0
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2 - self.size);
        for u in 0..n {
            for v in u + 1..n {
                if self.masks[u] & (1 << v) == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Mask with one bit set per vertex.
    pub(crate) fn full_mask(&self) -> u64 {
        match self.order() {
            0 => 0,
            MAX_ORDER => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut reached = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.masks[v];
            }
            frontier = next & !reached;
            reached |= frontier;
        }
        reached == self.full_mask()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    ///
    /// Panics if `source` is not a vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        assert!(source < self.order(), "source vertex out of range");
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or_default() + 1;
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::Parse(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen & (1 << p) != 0 {
                return Err(Error::Parse("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
