//! Canonical labeling by individualization and refinement.
//!
//! Vertices start out colored by `(degree, sorted distance multiset)`, and the
//! coloring is refined until it is equitable. The search then individualizes
//! each vertex of the first non-singleton cell in turn, refines again, and
//! recurses. Every discrete coloring is a labeling, and the certificate is
//! the smallest graph6 encoding among them. Automorphisms show up as leaves
//! with identical encodings; they prune siblings that lie in an orbit of the
//! pointwise stabilizer of the current prefix.

use std::fmt;

use crate::graph::Graph;
use crate::io::{from_graph6, to_graph6};

/// Label-invariant encoding: the graph6 string of the canonical relabeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(String);

impl Certificate {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        from_graph6(&self.0).expect("certificates hold valid graph6")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.0)
    }
}

/// Replaces each color by the rank of `key(v)` among all keys.
fn rank_by<K: Ord + Clone>(n: usize, key: impl Fn(usize) -> K) -> (Vec<usize>, usize) {
    let keys: Vec<K> = (0..n).map(&key).collect();
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    let colors = keys
        .iter()
        .map(|k| distinct.binary_search(k).expect("present"))
        .collect();
    (colors, distinct.len())
}

fn initial_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let (colors, _) = rank_by(n, |v| {
        let mut dist: Vec<usize> = g
            .bfs_distances(v)
            .into_iter()
            .map(|d| d.unwrap_or(usize::MAX))
            .collect();
        dist.sort_unstable();
        (g.degree(v), dist)
    });
    colors
}

/// Refines until the number of cells stops growing. New colors order first by
/// the old color, so cells split in place.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.order();
    let mut cells = count_cells(&colors);
    loop {
        let (next, next_cells) = rank_by(n, |v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            around.sort_unstable();
            (colors[v], around)
        });
        colors = next;
        if next_cells == cells {
            return colors;
        }
        cells = next_cells;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let (next, _) = rank_by(colors.len(), |u| (colors[u], u != v));
    next
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(String, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, labeling: Vec<usize>) {
        let relabeled = self
            .g
            .relabel(&labeling)
            .expect("discrete coloring is a permutation");
        let code = to_graph6(&relabeled);
        match &self.best {
            Some((best, _)) if &code > best => {}
            Some((best, best_labeling)) if &code == best => {
                let mut inverse = vec![0; labeling.len()];
                for (v, &p) in best_labeling.iter().enumerate() {
                    inverse[p] = v;
                }
                let sigma = labeling.iter().map(|&p| inverse[p]).collect();
                self.automorphisms.push(sigma);
            }
            _ => self.best = Some((code, labeling)),
        }
    }

    /// Whether `w` shares an orbit with a vertex in `tried` under the known
    /// automorphisms that fix `prefix` pointwise.
    fn equivalent(&self, w: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for sigma in &self.automorphisms {
            if prefix.iter().all(|&p| sigma[p] == p) {
                for (v, &image) in sigma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }

    fn descend(&mut self, colors: Vec<usize>, prefix: &mut Vec<usize>) {
        let n = self.g.order();
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
            self.leaf(colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried = Vec::with_capacity(cell.len());
        for w in cell {
            if self.equivalent(w, &tried, prefix) {
                continue;
            }
            tried.push(w);
            let next = refine(self.g, individualize(&colors, w));
            prefix.push(w);
            self.descend(next, prefix);
            prefix.pop();
        }
    }
}

/// The canonical relabeling permutation (`perm[v]` is the new label of `v`)
/// and the resulting certificate.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, Certificate) {
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let start = refine(g, initial_colors(g));
    search.descend(start, &mut Vec::new());
    let (code, labeling) = search.best.expect("the search always reaches a leaf");
    (labeling, Certificate(code))
}

pub fn canonical_certificate(g: &Graph) -> Certificate {
    canonical_labeling(g).1
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_certificate(g) == canonical_certificate(h)
}
