//! Text formats: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups, each offset by 63 to
//! land in printable ASCII. The order is a single byte `n + 63` for `n <= 62`
//! and `~` followed by three 6-bit groups up to 258047.
//!
//! The edge list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based labels. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let group = |b: u8| -> Result<u8> {
        if (63..=126).contains(&b) {
            Ok(b - 63)
        } else {
            Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")))
        }
    };
    let (n, body) = match bytes.first() {
        None => return Err(Error::Parse("empty graph6 string".into())),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(Error::TooManyVertices {
                    order: 258048,
                    max: MAX_ORDER,
                });
            }
            if bytes.len() < 4 {
                return Err(Error::Parse("truncated graph6 order".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | group(b)? as usize;
            }
            (n, &bytes[4..])
        }
        Some(&b) => (group(b)? as usize, &bytes[1..]),
    };
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices {
            order: n,
            max: MAX_ORDER,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for order {n}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = group(body[k / 6])?;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = group(body[expected - 1])? & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(Error::Parse("nonzero graph6 padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

/// Parses every non-blank line of a graph6 file.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("line {lineno}: expected integer, got {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!(
            "line {lineno}: expected two integers, got {line:?}"
        ))),
    }
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
    let (n, m) = parse_pair(lineno, header)?;
    let edges = lines
        .map(|(i, l)| parse_pair(i, l))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads either format. Text whose first content line holds two integers is
/// an edge list; anything else is treated as graph6, one graph per line.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = content_lines(text).next();
    match first {
        Some((i, l)) if parse_pair(i, l).is_ok() => Ok(vec![from_edge_list(text)?]),
        Some(_) => read_graph6_lines(text),
        None => Err(Error::Parse("no graph found in input".into())),
    }
}
