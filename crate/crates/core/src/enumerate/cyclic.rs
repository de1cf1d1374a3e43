//! Unicyclic and bicyclic graphs as spanning trees plus chords.
//!
//! A connected graph with `n - 1 + k` edges is a spanning tree plus `k`
//! non-tree edges, so expanding every free tree by every `k`-set of its
//! non-edges reaches every isomorphism class. Classes are hit many times;
//! `dedupe` filters the stream by certificate.

use std::collections::HashSet;

use crate::canon::canonical_certificate;
use crate::error::{Error, Result};
use crate::families::GraphClass;
use crate::graph::Graph;

use super::trees::{free_trees, MAX_TREE_ORDER};

/// Largest order accepted by the cyclic generators and the sweeps.
pub const MAX_SWEEP_ORDER: usize = 14;

/// Every graph obtained from `tree` by adding `chords` (0, 1 or 2) non-edges.
pub fn chord_expansions(
    tree: &Graph,
    chords: usize,
) -> Box<dyn Iterator<Item = Graph> + Send + '_> {
    match chords {
        0 => Box::new(std::iter::once(tree.clone())),
        1 => Box::new(
            tree.non_edges()
                .into_iter()
                .map(move |e| tree.with_edges([e]).expect("non-edges are valid")),
        ),
        2 => {
            let candidates = tree.non_edges();
            let pairs: Vec<_> = (0..candidates.len())
                .flat_map(|i| (i + 1..candidates.len()).map(move |j| (i, j)))
                .collect();
            Box::new(pairs.into_iter().map(move |(i, j)| {
                tree.with_edges([candidates[i], candidates[j]])
                    .expect("non-edges are valid")
            }))
        }
        _ => panic!("only up to two chords are supported"),
    }
}

pub(crate) fn check_order(class: GraphClass, n: usize) -> Result<usize> {
    let (min, max) = match class {
        GraphClass::Tree => (1, MAX_TREE_ORDER),
        GraphClass::Unicyclic => (3, MAX_SWEEP_ORDER),
        GraphClass::Bicyclic => (4, MAX_SWEEP_ORDER),
        GraphClass::Other => {
            return Err(Error::Parse(
                "only tree, unicyclic and bicyclic classes are enumerable".into(),
            ))
        }
    };
    if !(min..=max).contains(&n) {
        return Err(Error::OrderOutOfRange {
            n,
            reason: format!("{class} graphs are enumerated for {min}..={max}"),
        });
    }
    Ok(class.chords().expect("enumerable class"))
}

/// All graphs of `class` and order `n`, optionally one per isomorphism class.
pub fn class_graphs(
    class: GraphClass,
    n: usize,
    dedupe: bool,
) -> Result<Box<dyn Iterator<Item = Graph>>> {
    let chords = check_order(class, n)?;
    let trees: Vec<Graph> = free_trees(n)?.collect();
    let stream = trees
        .into_iter()
        .flat_map(move |t| chord_expansions(&t, chords).collect::<Vec<_>>());
    if dedupe {
        let mut seen = HashSet::new();
        Ok(Box::new(
            stream.filter(move |g| seen.insert(canonical_certificate(g))),
        ))
    } else {
        Ok(Box::new(stream))
    }
}

pub fn unicyclic_graphs(n: usize, dedupe: bool) -> Result<Box<dyn Iterator<Item = Graph>>> {
    class_graphs(GraphClass::Unicyclic, n, dedupe)
}

pub fn bicyclic_graphs(n: usize, dedupe: bool) -> Result<Box<dyn Iterator<Item = Graph>>> {
    class_graphs(GraphClass::Bicyclic, n, dedupe)
}
