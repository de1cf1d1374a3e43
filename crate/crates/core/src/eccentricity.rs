//! Eccentricities, radius, diameter and center.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-vertex eccentricities of a connected graph with the quantities derived
/// from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// Vertices attaining the radius, ascending.
    pub center_vertices: Vec<usize>,
    /// Eccentricity value to the number of vertices having it.
    pub histogram: BTreeMap<usize, usize>,
}

impl EccentricityProfile {
    pub fn total(&self) -> u64 {
        self.ecc.iter().map(|&e| e as u64).sum()
    }
}

/// Eccentricity of every vertex, or `None` when `g` is disconnected.
///
/// Bit-parallel BFS: each layer is the union of the neighborhoods of the
/// previous one, so a source costs `O(n · e(v))` word operations.
pub fn eccentricities(g: &Graph) -> Option<Vec<usize>> {
    let full = g.full_mask();
    (0..g.order())
        .map(|source| {
            let mut reached = 1u64 << source;
            let mut frontier = reached;
            let mut depth = 0;
            while reached != full {
                let mut next = 0u64;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= g.neighbor_mask(v);
                }
                frontier = next & !reached;
                if frontier == 0 {
                    return None;
                }
                reached |= frontier;
                depth += 1;
            }
            Some(depth)
        })
        .collect()
}

pub fn eccentricity_profile(g: &Graph) -> Result<EccentricityProfile> {
    if g.order() == 0 {
        return Err(Error::Parse(
            "eccentricity of the null graph is undefined".into(),
        ));
    }
    let ecc = eccentricities(g).ok_or(Error::Disconnected)?;
    let radius = *ecc.iter().min().expect("nonempty");
    let diameter = *ecc.iter().max().expect("nonempty");
    let center_vertices = (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
    let mut histogram = BTreeMap::new();
    for &e in &ecc {
        *histogram.entry(e).or_insert(0) += 1;
    }
    Ok(EccentricityProfile {
        ecc,
        radius,
        diameter,
        center_vertices,
        histogram,
    })
}

/// The vertices farthest from `v`.
pub fn eccentric_vertices(g: &Graph, v: usize) -> Result<Vec<usize>> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let dist: Option<Vec<usize>> = g.bfs_distances(v).into_iter().collect();
    let dist = dist.ok_or(Error::Disconnected)?;
    let far = *dist.iter().max().expect("nonempty");
    Ok((0..dist.len()).filter(|&w| dist[w] == far).collect())
}
