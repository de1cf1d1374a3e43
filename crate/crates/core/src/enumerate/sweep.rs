//! Extremal index values over an enumerated class.
//!
//! Trees are distributed across a rayon pool; each worker expands its trees
//! and keeps a local [`Tally`], and tallies merge by min/max and set union.
//! Merging is associative and commutative, so the result does not depend on
//! the worker count or on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_certificate, Certificate};
use crate::eccentricity::eccentricities;
use crate::error::{Error, Result};
use crate::families::GraphClass;
use crate::graph::Graph;
use crate::matching::has_perfect_matching;

use super::cyclic::{check_order, chord_expansions};
use super::trees::free_trees;

/// The index a sweep optimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Index {
    #[default]
    TotalEccentricity,
    EccentricConnectivity,
}

impl Index {
    pub fn name(self) -> &'static str {
        match self {
            Index::TotalEccentricity => "tau",
            Index::EccentricConnectivity => "xi",
        }
    }

    /// `None` for disconnected graphs.
    pub fn evaluate(self, g: &Graph) -> Option<u64> {
        let ecc = eccentricities(g)?;
        Some(match self {
            Index::TotalEccentricity => ecc.iter().map(|&e| e as u64).sum(),
            Index::EccentricConnectivity => ecc
                .iter()
                .enumerate()
                .map(|(v, &e)| (g.degree(v) * e) as u64)
                .sum(),
        })
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tau" | "total" | "total-eccentricity" => Ok(Index::TotalEccentricity),
            "xi" | "eccentric-connectivity" => Ok(Index::EccentricConnectivity),
            _ => Err(Error::Parse(format!(
                "unknown index {s:?} (expected tau or xi)"
            ))),
        }
    }
}

/// Value distribution of one sub-population and the isomorphism classes at
/// its extremes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extremes {
    pub inspected: u64,
    /// Value to number of graphs attaining it.
    pub values: BTreeMap<u64, u64>,
    min_witnesses: BTreeSet<Certificate>,
    max_witnesses: BTreeSet<Certificate>,
}

impl Extremes {
    fn count(&mut self, value: u64) {
        self.inspected += 1;
        *self.values.entry(value).or_insert(0) += 1;
    }

    fn merge_counts(mut self, other: Extremes) -> Extremes {
        self.inspected += other.inspected;
        for (v, c) in other.values {
            *self.values.entry(v).or_insert(0) += c;
        }
        self
    }

    fn min_value(&self) -> Option<u64> {
        self.values.keys().next().copied()
    }

    fn max_value(&self) -> Option<u64> {
        self.values.keys().next_back().copied()
    }

    pub fn min(&self) -> Option<(u64, &BTreeSet<Certificate>)> {
        self.min_value().map(|v| (v, &self.min_witnesses))
    }

    pub fn max(&self) -> Option<(u64, &BTreeSet<Certificate>)> {
        self.max_value().map(|v| (v, &self.max_witnesses))
    }

    /// Number of graphs whose value lies outside `[low, high]`.
    pub fn outside(&self, low: u64, high: u64) -> u64 {
        self.values
            .iter()
            .filter(|(&v, _)| v < low || v > high)
            .map(|(_, &c)| c)
            .sum()
    }
}

/// Extremes over a whole class and over its conjugated members.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub all: Extremes,
    pub conjugated: Extremes,
}

#[derive(Default)]
struct Counts {
    all: Extremes,
    conjugated: Extremes,
}

/// Witnesses found in the second pass, split by which extreme they attain.
#[derive(Default)]
struct Found {
    all_min: BTreeSet<Certificate>,
    all_max: BTreeSet<Certificate>,
    conj_min: BTreeSet<Certificate>,
    conj_max: BTreeSet<Certificate>,
}

impl Found {
    fn merge(mut self, other: Found) -> Found {
        self.all_min.extend(other.all_min);
        self.all_max.extend(other.all_max);
        self.conj_min.extend(other.conj_min);
        self.conj_max.extend(other.conj_max);
        self
    }
}

/// Graphs to walk: chord expansions of a tree list, or a deduplicated list.
enum Source {
    Expansions(Vec<Graph>, usize),
    Unique(Vec<Graph>),
}

impl Source {
    fn fold<A, F, M>(&self, fold: F, merge: M) -> A
    where
        A: Default + Send,
        F: Fn(&mut A, &Graph) + Sync,
        M: Fn(A, A) -> A + Sync,
    {
        match self {
            Source::Expansions(trees, chords) => trees
                .par_iter()
                .map(|t| {
                    let mut acc = A::default();
                    for g in chord_expansions(t, *chords) {
                        fold(&mut acc, &g);
                    }
                    acc
                })
                .reduce(A::default, &merge),
            Source::Unique(graphs) => graphs
                .par_chunks(64)
                .map(|chunk| {
                    let mut acc = A::default();
                    for g in chunk {
                        fold(&mut acc, g);
                    }
                    acc
                })
                .reduce(A::default, &merge),
        }
    }
}

/// Options for a sweep over one class and order.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub class: GraphClass,
    pub n: usize,
    pub conjugated_only: bool,
    pub index: Index,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    /// Collapse the stream to one graph per isomorphism class first.
    pub dedupe: bool,
}

impl SweepConfig {
    pub fn new(class: GraphClass, n: usize) -> Self {
        SweepConfig {
            class,
            n,
            conjugated_only: false,
            index: Index::TotalEccentricity,
            workers: 0,
            dedupe: false,
        }
    }

    pub fn conjugated_only(mut self, yes: bool) -> Self {
        self.conjugated_only = yes;
        self
    }

    pub fn index(mut self, index: Index) -> Self {
        self.index = index;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn dedupe(mut self, yes: bool) -> Self {
        self.dedupe = yes;
        self
    }

    /// Walks the class, tracking all graphs and, when `track_conjugated` is
    /// set, the conjugated ones separately.
    ///
    /// The first pass only records value distributions; the second computes
    /// certificates for graphs at the extremes found by the first.
    pub fn tally(&self, track_conjugated: bool) -> Result<Tally> {
        let chords = check_order(self.class, self.n)?;
        let trees: Vec<Graph> = free_trees(self.n)?.collect();
        let index = self.index;
        let track_conjugated = track_conjugated && self.n.is_multiple_of(2);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Parse(format!("cannot start worker pool: {e}")))?;
        let value_of = |g: &Graph| index.evaluate(g).expect("enumerated graphs are connected");

        pool.install(|| {
            let source = if self.dedupe {
                let unique: BTreeMap<Certificate, Graph> = Source::Expansions(trees, chords).fold(
                    |acc: &mut BTreeMap<Certificate, Graph>, g| {
                        acc.entry(canonical_certificate(g))
                            .or_insert_with(|| g.clone());
                    },
                    |mut a, b| {
                        for (k, v) in b {
                            a.entry(k).or_insert(v);
                        }
                        a
                    },
                );
                Source::Unique(unique.into_values().collect())
            } else {
                Source::Expansions(trees, chords)
            };

            let counts = source.fold(
                |acc: &mut Counts, g| {
                    let value = value_of(g);
                    acc.all.count(value);
                    if track_conjugated && has_perfect_matching(g) {
                        acc.conjugated.count(value);
                    }
                },
                |a, b| Counts {
                    all: a.all.merge_counts(b.all),
                    conjugated: a.conjugated.merge_counts(b.conjugated),
                },
            );

            let (all_min, all_max) = (counts.all.min_value(), counts.all.max_value());
            let (conj_min, conj_max) =
                (counts.conjugated.min_value(), counts.conjugated.max_value());
            let found = source.fold(
                |acc: &mut Found, g| {
                    let value = Some(value_of(g));
                    let hits_all = value == all_min || value == all_max;
                    let hits_conj = value == conj_min || value == conj_max;
                    if !hits_all && !hits_conj {
                        return;
                    }
                    let conj = hits_conj && has_perfect_matching(g);
                    if !hits_all && !conj {
                        return;
                    }
                    let cert = canonical_certificate(g);
                    if value == all_min {
                        acc.all_min.insert(cert.clone());
                    }
                    if value == all_max {
                        acc.all_max.insert(cert.clone());
                    }
                    if conj && value == conj_min {
                        acc.conj_min.insert(cert.clone());
                    }
                    if conj && value == conj_max {
                        acc.conj_max.insert(cert);
                    }
                },
                Found::merge,
            );

            let mut all = counts.all;
            all.min_witnesses = found.all_min;
            all.max_witnesses = found.all_max;
            let mut conjugated = counts.conjugated;
            conjugated.min_witnesses = found.conj_min;
            conjugated.max_witnesses = found.conj_max;
            Ok(Tally { all, conjugated })
        })
    }

    pub fn run(&self) -> Result<ExtremalReport> {
        if self.conjugated_only && self.n % 2 == 1 {
            return Err(Error::EmptyClass(format!(
                "conjugated {} (odd order {})",
                self.class, self.n
            )));
        }
        let start = Instant::now();
        let tally = self.tally(self.conjugated_only)?;
        let extremes = if self.conjugated_only {
            tally.conjugated
        } else {
            tally.all
        };
        let label = if self.conjugated_only {
            format!("conjugated {}", self.class)
        } else {
            self.class.to_string()
        };
        ExtremalReport::from_extremes(self, &extremes, start.elapsed())
            .ok_or(Error::EmptyClass(label))
    }
}

/// Result of a sweep: extreme values and every isomorphism class attaining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub class: GraphClass,
    pub conjugated_only: bool,
    pub n: usize,
    pub index: Index,
    pub min_value: u64,
    pub max_value: u64,
    /// Sorted, one certificate per isomorphism class.
    pub min_witnesses: Vec<Certificate>,
    pub max_witnesses: Vec<Certificate>,
    /// Graphs in the (filtered) stream, counting repeats unless deduplicated.
    pub graphs_inspected: u64,
    pub elapsed: Duration,
}

impl ExtremalReport {
    pub(crate) fn from_extremes(
        config: &SweepConfig,
        extremes: &Extremes,
        elapsed: Duration,
    ) -> Option<Self> {
        let (min_value, min_set) = extremes.min()?;
        let (max_value, max_set) = extremes.max()?;
        Some(ExtremalReport {
            class: config.class,
            conjugated_only: config.conjugated_only,
            n: config.n,
            index: config.index,
            min_value,
            max_value,
            min_witnesses: min_set.iter().cloned().collect(),
            max_witnesses: max_set.iter().cloned().collect(),
            graphs_inspected: extremes.inspected,
            elapsed,
        })
    }
}

/// Total-eccentricity sweep with default options.
pub fn extremal_sweep(
    class: GraphClass,
    n: usize,
    conjugated_only: bool,
) -> Result<ExtremalReport> {
    SweepConfig::new(class, n)
        .conjugated_only(conjugated_only)
        .run()
}
