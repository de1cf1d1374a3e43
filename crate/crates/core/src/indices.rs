//! Eccentricity-based topological indices and closed forms for the named
//! families.

use num_rational::Rational64;

use crate::eccentricity::{eccentricities, eccentricity_profile};
use crate::error::{Error, Result};
use crate::families::{classify, FamilySpec, GraphClass};
use crate::graph::Graph;
use crate::matching::has_perfect_matching;

/// Comparison tolerance for the Randić index, the only floating-point index.
pub const RANDIC_TOLERANCE: f64 = 1e-9;

fn ecc_or_error(g: &Graph) -> Result<Vec<usize>> {
    if g.order() == 0 {
        return Err(Error::Parse(
            "indices of the null graph are undefined".into(),
        ));
    }
    eccentricities(g).ok_or(Error::Disconnected)
}

/// Total eccentricity: the sum of all vertex eccentricities.
pub fn total_eccentricity(g: &Graph) -> Result<u64> {
    Ok(ecc_or_error(g)?.into_iter().map(|e| e as u64).sum())
}

pub fn average_eccentricity(g: &Graph) -> Result<Rational64> {
    let total = total_eccentricity(g)?;
    Ok(Rational64::new(total as i64, g.order() as i64))
}

/// Degree-weighted eccentricity sum.
pub fn eccentric_connectivity(g: &Graph) -> Result<u64> {
    let ecc = ecc_or_error(g)?;
    Ok(ecc
        .iter()
        .enumerate()
        .map(|(v, &e)| (g.degree(v) * e) as u64)
        .sum())
}

pub fn randic_index(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

/// The indices reported for a single graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSummary {
    pub order: usize,
    pub size: usize,
    pub class: GraphClass,
    pub radius: usize,
    pub diameter: usize,
    pub total_eccentricity: u64,
    pub average_eccentricity: Rational64,
    pub eccentric_connectivity: u64,
    pub randic: f64,
    pub conjugated: bool,
}

pub fn summarize(g: &Graph) -> Result<GraphSummary> {
    let profile = eccentricity_profile(g)?;
    let total = profile.total();
    Ok(GraphSummary {
        order: g.order(),
        size: g.size(),
        class: classify(g),
        radius: profile.radius,
        diameter: profile.diameter,
        total_eccentricity: total,
        average_eccentricity: Rational64::new(total as i64, g.order() as i64),
        eccentric_connectivity: eccentric_connectivity(g)?,
        randic: randic_index(g),
        conjugated: has_perfect_matching(g),
    })
}

/// A family's total eccentricity from its closed form, next to the published
/// expression where one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub family: FamilySpec,
    /// Closed form that agrees with direct computation on the constructor.
    pub implemented: Rational64,
    /// The published expression evaluated at the same parameters.
    pub published: Option<Rational64>,
    pub discrepancy: bool,
}

fn r(numer: i64, denom: i64) -> Rational64 {
    Rational64::new(numer, denom)
}

/// `3n²/4 - n + c` for the path-with-chords families.
fn quadratic(n: i64, c: Rational64) -> Rational64 {
    r(3 * n * n, 4) - n + c
}

pub fn closed_form_total_eccentricity(spec: FamilySpec) -> Result<ClosedFormResult> {
    spec.validate()?;
    let n = spec.order() as i64;
    let even = n % 2 == 0;
    let path_form = if even {
        r(3 * n * n, 4) - r(n, 2)
    } else {
        r(3 * n * n, 4) - r(n, 2) - r(1, 4)
    };
    let (implemented, published) = match spec {
        FamilySpec::Path(_) => (path_form, Some(path_form)),
        FamilySpec::Cycle(_) => {
            let printed = if even { r(n, 2) } else { r(n - 1, 2) };
            (r(n * (n / 2), 1), Some(printed))
        }
        FamilySpec::Complete(_) => (r(n, 1), Some(r(n, 1))),
        FamilySpec::CompleteBipartite(a, b) => match (a.min(b), n) {
            (1, 2) => (r(2, 1), None),
            (1, _) => (r(2 * n - 1, 1), Some(r(2 * n - 1, 1))),
            _ => (r(2 * n, 1), Some(r(2 * n, 1))),
        },
        FamilySpec::Star(_) => (r(2 * n - 1, 1), Some(r(2 * n - 1, 1))),
        FamilySpec::ConjugatedStarTree(_) => (r(7 * n, 2) - 2, None),
        FamilySpec::U2(_) => {
            let c = if even { r(-1, 1) } else { r(-3, 4) };
            (quadratic(n, c), None)
        }
        FamilySpec::B2(_) => {
            let c = if even { r(-2, 1) } else { r(-7, 4) };
            (quadratic(n, c), None)
        }
        FamilySpec::U1Bar(_) => {
            // With only two legs the unchorded leg's middle vertex reaches
            // everything in two steps.
            let value = if n == 6 { r(16, 1) } else { r(7 * n, 2) - 3 };
            (value, Some(r(7 * n, 2) - 3))
        }
        FamilySpec::U2Bar(_) => (quadratic(n, r(-1, 1)), Some(quadratic(n, r(-3, 4)))),
        FamilySpec::B1Bar(_) => {
            // Same effect as above with a single unchorded leg.
            let value = if n == 8 { r(22, 1) } else { r(7 * n, 2) - 4 };
            (value, Some(r(7 * n, 2) - 4))
        }
        FamilySpec::B2Bar(_) => (quadratic(n, r(-2, 1)), Some(quadratic(n, r(-2, 1)))),
    };
    Ok(ClosedFormResult {
        family: spec,
        implemented,
        published,
        discrepancy: published.is_some_and(|p| p != implemented),
    })
}
