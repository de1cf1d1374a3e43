//! Free trees, one per isomorphism class.
//!
//! Trees are walked as level sequences (preorder depths of a rooted tree) in
//! the successor order of Beyer and Hedetniemi. Wright, Richmond, Odlyzko and
//! McKay showed how to restrict that walk to sequences rooted at a center in
//! canonical position, which visits every free tree exactly once at constant
//! amortized cost. The walk starts from the path rooted at its center.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest tree order the generator accepts.
pub const MAX_TREE_ORDER: usize = 16;

/// Successor of a level sequence among rooted trees, replacing everything
/// from position `p` on. `p` defaults to the last entry deeper than 1.
fn next_rooted(layout: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut next = layout.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits off the first subtree of the root: returns it re-rooted (depths
/// reduced by one) together with the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let second = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..second].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[second..].iter().copied())
        .collect();
    (left, rest)
}

fn height(layout: &[usize]) -> usize {
    layout.iter().copied().max().unwrap_or(0)
}

/// Returns `candidate` if it is the canonical free-tree layout, otherwise the
/// next canonical one.
fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let (lh, rh) = (height(&left), height(&rest));
    let valid = rh > lh
        || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = height(&new_left);
        let len = next.len();
        for (slot, depth) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = depth;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (i, &depth) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= depth {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), edges).expect("level sequences describe simple trees")
}

/// Iterator over the non-isomorphic free trees of a fixed order.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    state: State,
}

#[derive(Debug, Clone)]
enum State {
    Single(usize),
    Layout(Vec<usize>),
    Done,
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match std::mem::replace(&mut self.state, State::Done) {
            State::Done => None,
            State::Single(n) => Some(layout_to_graph(&(0..n).collect::<Vec<_>>())),
            State::Layout(layout) => {
                let tree_layout = next_free(layout)?;
                let tree = layout_to_graph(&tree_layout);
                if let Some(next) = next_rooted(&tree_layout, None) {
                    self.state = State::Layout(next);
                }
                Some(tree)
            }
        }
    }
}

/// All free trees of order `n`, each isomorphism class exactly once.
pub fn free_trees(n: usize) -> Result<FreeTrees> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            n,
            reason: format!("tree generation supports 1..={MAX_TREE_ORDER}"),
        });
    }
    let state = if n <= 2 {
        State::Single(n)
    } else {
        // path rooted at its center
        State::Layout((0..=n / 2).chain(1..n.div_ceil(2)).collect())
    };
    Ok(FreeTrees { state })
}
