//! Blocks (maximal 2-connected pieces, bridges counted as `K₂`) and cut vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<usize>,
    /// Each block as a sorted list of `(min, max)` edges. Blocks are ordered
    /// by their smallest edge.
    pub blocks: Vec<Vec<(usize, usize)>>,
}

impl BlockDecomposition {
    /// Sorted vertex set of block `i`.
    pub fn block_vertices(&self, i: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.blocks[i].iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Whether some single block contains every vertex of `set`.
    ///
    /// A singleton always qualifies, also for the one-vertex graph which has
    /// no edges and hence no blocks.
    pub fn within_one_block(&self, set: &[usize]) -> bool {
        if set.len() <= 1 {
            return true;
        }
        (0..self.blocks.len()).any(|i| {
            let vs = self.block_vertices(i);
            set.iter().all(|v| vs.binary_search(v).is_ok())
        })
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<(usize, usize)>>,
    is_cut: Vec<bool>,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        let mut children = 0;
        for &w in self.g.neighbors(u) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((u.min(w), u.max(w)));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.is_cut[u] = true;
                    }
                    let edge = (u.min(w), u.max(w));
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == edge {
                            break;
                        }
                    }
                    block.sort_unstable();
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push((u.min(w), u.max(w)));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        timer: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    if n > 0 {
        dfs.visit(0, None);
    }
    let mut blocks = dfs.blocks;
    blocks.sort();
    Ok(BlockDecomposition {
        cut_vertices: (0..n).filter(|&v| dfs.is_cut[v]).collect(),
        blocks,
    })
}
