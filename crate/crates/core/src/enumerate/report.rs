//! CSV and Markdown renderings of sweep reports and verification outcomes.
//!
//! Witness lists are space-separated graph6 certificates; graph6 never uses
//! spaces, commas or quotes, so fields need no quoting.

use std::fmt::Write as _;

use super::sweep::ExtremalReport;
use super::verify::{fmt_rational, VerificationOutcome};

pub const REPORT_COLUMNS: [&str; 9] = [
    "class",
    "conjugated",
    "n",
    "index",
    "min",
    "max",
    "min_witnesses",
    "max_witnesses",
    "inspected",
];

pub const OUTCOME_COLUMNS: [&str; 8] = [
    "claim",
    "n",
    "status",
    "expected",
    "witness_value",
    "observed",
    "witnesses",
    "note",
];

fn report_fields(r: &ExtremalReport) -> [String; 9] {
    let join = |w: &[crate::canon::Certificate]| {
        w.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(" ")
    };
    [
        r.class.to_string(),
        r.conjugated_only.to_string(),
        r.n.to_string(),
        r.index.to_string(),
        r.min_value.to_string(),
        r.max_value.to_string(),
        join(&r.min_witnesses),
        join(&r.max_witnesses),
        r.graphs_inspected.to_string(),
    ]
}

fn outcome_fields(o: &VerificationOutcome) -> [String; 8] {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    [
        o.id(),
        o.n.to_string(),
        o.status.to_string(),
        opt(o.expected_value.map(fmt_rational)),
        opt(o.witness_value.map(|v| v.to_string())),
        opt(o.observed_value.map(|v| v.to_string())),
        o.observed_witnesses
            .iter()
            .map(|c| c.as_str())
            .collect::<Vec<_>>()
            .join(" "),
        o.note.clone(),
    ]
}

fn csv<const N: usize>(header: [&str; N], rows: impl Iterator<Item = [String; N]>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn markdown<const N: usize>(header: [&str; N], rows: impl Iterator<Item = [String; N]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(N));
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| {
                if c.is_empty() {
                    " ".into()
                } else {
                    c.replace('|', "\\|")
                }
            })
            .collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

pub fn reports_csv(reports: &[ExtremalReport]) -> String {
    csv(REPORT_COLUMNS, reports.iter().map(report_fields))
}

pub fn reports_markdown(reports: &[ExtremalReport]) -> String {
    markdown(REPORT_COLUMNS, reports.iter().map(report_fields))
}

pub fn outcomes_csv(outcomes: &[VerificationOutcome]) -> String {
    csv(OUTCOME_COLUMNS, outcomes.iter().map(outcome_fields))
}

pub fn outcomes_markdown(outcomes: &[VerificationOutcome]) -> String {
    markdown(OUTCOME_COLUMNS, outcomes.iter().map(outcome_fields))
}
