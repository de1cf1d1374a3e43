//! Constructors for the named graph families.
//!
//! Labels are fixed so that output is deterministic:
//!
//! * paths run `0 - 1 - ... - (n-1)`; `U2` adds the chord `0-2`, `B2` adds
//!   `0-2` and `0-3`;
//! * the conjugated spider `Sn*` has center `0`, a pendant `1`, and legs
//!   `0 - 2i - 2i+1` for `i = 1..(n-2)/2`; `U1bar` joins the center to the
//!   first leg end (`3`), `B1bar` to the first two leg ends (`3` and `5`);
//! * `K_{a,b}` puts the `a` side on `0..a`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    /// The conjugated spider tree `Sn*`.
    ConjugatedStarTree(usize),
    U2(usize),
    B2(usize),
    U1Bar(usize),
    U2Bar(usize),
    B1Bar(usize),
    B2Bar(usize),
}

/// Structural class by edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphClass {
    Tree,
    Unicyclic,
    Bicyclic,
    Other,
}

impl GraphClass {
    /// Edges beyond a spanning tree, for the three cyclomatic classes.
    pub fn chords(self) -> Option<usize> {
        match self {
            GraphClass::Tree => Some(0),
            GraphClass::Unicyclic => Some(1),
            GraphClass::Bicyclic => Some(2),
            GraphClass::Other => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::Bicyclic => "bicyclic",
            GraphClass::Other => "other",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tree" => Ok(GraphClass::Tree),
            "unicyclic" => Ok(GraphClass::Unicyclic),
            "bicyclic" => Ok(GraphClass::Bicyclic),
            _ => Err(Error::Parse(format!(
                "unknown class {s:?} (expected tree, unicyclic or bicyclic)"
            ))),
        }
    }
}

pub fn classify(g: &Graph) -> GraphClass {
    if !g.is_connected() {
        return GraphClass::Other;
    }
    match (g.size() + 1).checked_sub(g.order()) {
        Some(0) => GraphClass::Tree,
        Some(1) => GraphClass::Unicyclic,
        Some(2) => GraphClass::Bicyclic,
        _ => GraphClass::Other,
    }
}

fn invalid(spec: &FamilySpec, why: &str) -> Error {
    Error::InvalidFamily(format!("{spec}: {why}"))
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "kab",
            FamilySpec::Star(_) => "star",
            FamilySpec::ConjugatedStarTree(_) => "sstar",
            FamilySpec::U2(_) => "u2",
            FamilySpec::B2(_) => "b2",
            FamilySpec::U1Bar(_) => "u1bar",
            FamilySpec::U2Bar(_) => "u2bar",
            FamilySpec::B1Bar(_) => "b1bar",
            FamilySpec::B2Bar(_) => "b2bar",
        }
    }

    /// Number of vertices of the constructed graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::ConjugatedStarTree(n)
            | FamilySpec::U2(n)
            | FamilySpec::B2(n)
            | FamilySpec::U1Bar(n)
            | FamilySpec::U2Bar(n)
            | FamilySpec::B1Bar(n)
            | FamilySpec::B2Bar(n) => n,
        }
    }

    /// Checks the parameter range of the family.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let min_even = |min: usize| {
            if n % 2 == 1 {
                Err(invalid(self, "order must be even"))
            } else if n < min {
                Err(invalid(self, &format!("order must be at least {min}")))
            } else {
                Ok(())
            }
        };
        let at_least = |min: usize| {
            if n < min {
                Err(invalid(self, &format!("order must be at least {min}")))
            } else {
                Ok(())
            }
        };
        match *self {
            FamilySpec::Path(_) => at_least(1),
            FamilySpec::Cycle(_) | FamilySpec::Star(_) => at_least(3),
            FamilySpec::Complete(_) => at_least(2),
            FamilySpec::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    Err(invalid(self, "both sides must be nonempty"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::U2(_) => at_least(4),
            FamilySpec::B2(_) => at_least(5),
            FamilySpec::ConjugatedStarTree(_)
            | FamilySpec::U1Bar(_)
            | FamilySpec::U2Bar(_)
            | FamilySpec::B2Bar(_) => min_even(6),
            FamilySpec::B1Bar(_) => min_even(8),
        }?;
        if n > crate::graph::MAX_ORDER {
            return Err(Error::TooManyVertices {
                order: n,
                max: crate::graph::MAX_ORDER,
            });
        }
        Ok(())
    }

    /// The class every member of the family belongs to.
    pub fn expected_class(&self) -> GraphClass {
        match *self {
            FamilySpec::Path(_) | FamilySpec::Star(_) | FamilySpec::ConjugatedStarTree(_) => {
                GraphClass::Tree
            }
            FamilySpec::Cycle(_)
            | FamilySpec::U2(_)
            | FamilySpec::U1Bar(_)
            | FamilySpec::U2Bar(_) => GraphClass::Unicyclic,
            FamilySpec::B2(_) | FamilySpec::B1Bar(_) | FamilySpec::B2Bar(_) => GraphClass::Bicyclic,
            FamilySpec::Complete(n) => match n {
                0..=2 => GraphClass::Tree,
                3 => GraphClass::Unicyclic,
                _ => GraphClass::Other,
            },
            FamilySpec::CompleteBipartite(a, b) => match (a.min(b), a.max(b)) {
                (1, _) => GraphClass::Tree,
                (2, 2) => GraphClass::Unicyclic,
                (2, 3) => GraphClass::Bicyclic,
                _ => GraphClass::Other,
            },
        }
    }

    /// Whether the family is documented to admit a perfect matching.
    pub fn is_conjugated_family(&self) -> bool {
        match *self {
            FamilySpec::ConjugatedStarTree(_)
            | FamilySpec::U1Bar(_)
            | FamilySpec::U2Bar(_)
            | FamilySpec::B1Bar(_)
            | FamilySpec::B2Bar(_) => true,
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n % 2 == 0,
            FamilySpec::U2(n) | FamilySpec::B2(n) => n % 2 == 0,
            FamilySpec::CompleteBipartite(a, b) => a == b,
            FamilySpec::Star(n) => n == 2,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let path = || (1..n).map(|i| (i - 1, i));
        match *self {
            FamilySpec::Path(_) => Graph::from_edges(n, path()),
            FamilySpec::Cycle(_) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            FamilySpec::Complete(_) => {
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            FamilySpec::CompleteBipartite(a, _) => {
                Graph::from_edges(n, (0..a).flat_map(|u| (a..n).map(move |v| (u, v))))
            }
            FamilySpec::Star(_) => Graph::from_edges(n, (1..n).map(|v| (0, v))),
            FamilySpec::ConjugatedStarTree(_) => Graph::from_edges(n, spider_edges(n)),
            FamilySpec::U2(_) | FamilySpec::U2Bar(_) => {
                Graph::from_edges(n, path().chain([(0, 2)]))
            }
            FamilySpec::B2(_) | FamilySpec::B2Bar(_) => {
                Graph::from_edges(n, path().chain([(0, 2), (0, 3)]))
            }
            FamilySpec::U1Bar(_) => Graph::from_edges(n, spider_edges(n).chain([(0, 3)])),
            FamilySpec::B1Bar(_) => Graph::from_edges(n, spider_edges(n).chain([(0, 3), (0, 5)])),
        }
    }
}

/// `Sn*`: center 0, pendant 1, legs `0 - a - b` with `a = 2i`, `b = 2i + 1`.
fn spider_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    std::iter::once((0, 1)).chain((1..n / 2).flat_map(|i| [(0, 2 * i), (2 * i, 2 * i + 1)]))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(a, b) => write!(f, "kab:{a},{b}"),
            _ => write!(f, "{}:{}", self.name(), self.order()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `name:n` or `kab:a,b`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidFamily(format!("{s:?}: {why}"));
        let (name, params) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| bad("expected name:params"))?;
        let numbers = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| bad("parameters must be integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = match (
            name.trim().to_ascii_lowercase().as_str(),
            numbers.as_slice(),
        ) {
            ("kab" | "complete-bipartite", &[a, b]) => FamilySpec::CompleteBipartite(a, b),
            ("path", &[n]) => FamilySpec::Path(n),
            ("cycle", &[n]) => FamilySpec::Cycle(n),
            ("complete" | "k", &[n]) => FamilySpec::Complete(n),
            ("star", &[n]) => FamilySpec::Star(n),
            ("sstar" | "conj-star-tree", &[n]) => FamilySpec::ConjugatedStarTree(n),
            ("u2", &[n]) => FamilySpec::U2(n),
            ("b2", &[n]) => FamilySpec::B2(n),
            ("u1bar", &[n]) => FamilySpec::U1Bar(n),
            ("u2bar", &[n]) => FamilySpec::U2Bar(n),
            ("b1bar", &[n]) => FamilySpec::B1Bar(n),
            ("b2bar", &[n]) => FamilySpec::B2Bar(n),
            ("kab" | "complete-bipartite", _) => return Err(bad("expected two parameters a,b")),
            (
                "path" | "cycle" | "complete" | "k" | "star" | "sstar" | "conj-star-tree" | "u2"
                | "b2" | "u1bar" | "u2bar" | "b1bar" | "b2bar",
                _,
            ) => return Err(bad("expected one parameter")),
            _ => return Err(bad("unknown family")),
        };
        spec.validate()?;
        Ok(spec)
    }
}
