//! Brute-force oracles shared by the integration suites. None of them touch
//! the library's certificates, matching or enumeration code.
#![allow(dead_code)]

use eccx_core::Graph;
use rand::Rng;

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let edges: Vec<_> = g.edges().collect();
    perms
        .iter()
        .any(|p| edges.iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
}

/// Smallest upper-triangle bit pattern over all relabelings; n <= 8.
pub fn brute_canonical_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    assert!(n <= 8);
    let edges: Vec<_> = g.edges().collect();
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << (a * n + b)
            })
        })
        .min()
        .unwrap_or(0)
}

/// Largest set of pairwise disjoint edges, by exhaustive branching on the
/// lowest unmatched vertex.
pub fn brute_matching_size(g: &Graph) -> usize {
    fn best(g: &Graph, used: u64, from: usize) -> usize {
        let mut v = from;
        while v < g.order() && used >> v & 1 == 1 {
            v += 1;
        }
        if v >= g.order() {
            return 0;
        }
        let mut b = best(g, used | 1 << v, v + 1);
        for &w in g.neighbors(v) {
            if used >> w & 1 == 0 {
                b = b.max(1 + best(g, used | 1 << v | 1 << w, v + 1));
            }
        }
        b
    }
    best(g, 0, 0)
}

/// Connectivity by union-find over the edge list.
pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts <= 1
}

/// Every labeled tree on `0..n` via Prüfer sequences.
pub fn labeled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        let edges: Vec<_> = if n == 2 { vec![(0, 1)] } else { vec![] };
        return vec![Graph::from_edges(n, edges).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(Graph::from_edges(n, edges).unwrap());
    }
    out
}

/// Rooted-tree parenthesis code, children sorted.
fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical code of a free tree: least rooted code over its centers.
pub fn tree_code(g: &Graph) -> String {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    while remaining > 2 {
        let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
        for v in leaves {
            alive[v] = false;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
    }
    (0..n)
        .filter(|&v| alive[v])
        .map(|c| rooted_code(g, c, usize::MAX))
        .min()
        .unwrap()
}

/// Labeled connected graphs on `0..n` with exactly `m` edges; n <= 7.
pub fn labeled_connected(n: usize, m: usize) -> Vec<Graph> {
    assert!(n <= 7);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if mask.count_ones() as usize != m {
            continue;
        }
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        if connected(n, &edges) {
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_relabel(rng: &mut impl Rng, g: &Graph) -> Graph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

/// Vertices on cycles: what survives repeated removal of degree-1 vertices.
pub fn two_core(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    loop {
        let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
        if leaves.is_empty() {
            break;
        }
        for v in leaves {
            alive[v] = false;
            for &w in g.neighbors(v) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}
