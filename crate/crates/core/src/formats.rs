//! Text formats: alist and a plain bipartite edge list.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error;
use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("{side} {index}: declared degree {declared}, found {found} entries")]
    DegreeMismatch {
        side: &'static str,
        index: usize,
        declared: usize,
        found: usize,
    },
    #[error("row block disagrees with column block at variable {u}, check {w}")]
    InconsistentAdjacency { u: usize, w: usize },
    #[error("index {index} out of range (limit {limit}) in {context}")]
    IndexOutOfRange {
        index: usize,
        limit: usize,
        context: String,
    },
    #[error("line {line}: cannot parse {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("duplicate edge ({u}, {w})")]
    DuplicateEdge { u: usize, w: usize },
    #[error("unexpected end of input while reading {0}")]
    UnexpectedEof(&'static str),
}

struct Tokens<'a> {
    inner: std::str::SplitAsciiWhitespace<'a>,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.split_ascii_whitespace(),
        }
    }

    fn next(&mut self, what: &'static str) -> Result<usize, ParseError> {
        let tok = self.inner.next().ok_or(ParseError::UnexpectedEof(what))?;
        tok.parse().map_err(|_| {
            ParseError::MalformedHeader(format!(
                "expected a non-negative integer for {what}, got {tok:?}"
            ))
        })
    }
}

/// Reads one index list of `max_deg` slots (or `degree` slots when the file
/// is unpadded) and returns the nonzero 1-based entries as 0-based indices.
fn read_block(
    tokens: &mut Tokens<'_>,
    degrees: &[usize],
    max_deg: usize,
    limit: usize,
    side: &'static str,
    padded: bool,
) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut out = Vec::with_capacity(degrees.len());
    for (index, &declared) in degrees.iter().enumerate() {
        let slots = if padded { max_deg } else { declared };
        let mut row = Vec::with_capacity(declared);
        for _ in 0..slots {
            let v = tokens.next(side)?;
            if v == 0 {
                continue;
            }
            if v > limit {
                return Err(ParseError::IndexOutOfRange {
                    index: v,
                    limit,
                    context: format!("{side} {}", index + 1),
                });
            }
            row.push(v - 1);
        }
        if row.len() != declared {
            return Err(ParseError::DegreeMismatch {
                side,
                index: index + 1,
                declared,
                found: row.len(),
            });
        }
        out.push(row);
    }
    Ok(out)
}

/// Columns become U (variable nodes) and rows become W (check nodes).
/// Zero-padded and unpadded lists are both accepted.
pub fn parse_alist(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut tokens = Tokens::new(text);
    let n = tokens.next("column count")?;
    let m = tokens.next("row count")?;
    let max_col = tokens.next("maximum column degree")?;
    let max_row = tokens.next("maximum row degree")?;
    let col_deg = (0..n)
        .map(|_| tokens.next("column degrees"))
        .collect::<Result<Vec<_>, _>>()?;
    let row_deg = (0..m)
        .map(|_| tokens.next("row degrees"))
        .collect::<Result<Vec<_>, _>>()?;
    if col_deg.iter().any(|&d| d > max_col) || row_deg.iter().any(|&d| d > max_row) {
        return Err(ParseError::MalformedHeader(
            "a degree exceeds the declared maximum".into(),
        ));
    }
    if col_deg.iter().sum::<usize>() != row_deg.iter().sum::<usize>() {
        return Err(ParseError::MalformedHeader(
            "column and row degree sums differ".into(),
        ));
    }

    // Padding is inferred from the token count of the remaining input.
    let rest: Vec<&str> = tokens.inner.collect();
    let unpadded = col_deg.iter().sum::<usize>() * 2;
    let padded = n * max_col + m * max_row;
    let is_padded = rest.len() >= padded && padded != unpadded && rest.len() != unpadded;
    let rest_text = rest.join(" ");
    let mut tokens = Tokens::new(&rest_text);

    let cols = read_block(&mut tokens, &col_deg, max_col, m, "column", is_padded)?;
    let rows = read_block(&mut tokens, &row_deg, max_row, n, "row", is_padded)?;

    let mut from_cols = BTreeSet::new();
    for (u, ws) in cols.iter().enumerate() {
        for &w in ws {
            if !from_cols.insert((u, w)) {
                return Err(ParseError::DuplicateEdge { u, w });
            }
        }
    }
    let mut from_rows = BTreeSet::new();
    for (w, us) in rows.iter().enumerate() {
        for &u in us {
            if !from_cols.contains(&(u, w)) || !from_rows.insert((u, w)) {
                return Err(ParseError::InconsistentAdjacency { u, w });
            }
        }
    }
    if let Some(&(u, w)) = from_cols.difference(&from_rows).next() {
        return Err(ParseError::InconsistentAdjacency { u, w });
    }
    BipartiteGraph::new(n, m, from_cols).map_err(graph_error)
}

fn graph_error(e: Error) -> ParseError {
    match e {
        Error::DuplicateEdge { u, w } => ParseError::DuplicateEdge { u, w },
        Error::IndexOutOfRange { u, w, n, .. } => ParseError::IndexOutOfRange {
            index: if u >= n { u } else { w },
            limit: if u >= n { n } else { 0 },
            context: format!("edge ({u}, {w})"),
        },
        other => ParseError::MalformedHeader(other.to_string()),
    }
}

/// Zero-padded alist.
pub fn write_alist(graph: &BipartiteGraph) -> String {
    let (n, m) = (graph.n(), graph.m());
    let max_col = (0..n).map(|u| graph.u_degree(u)).max().unwrap_or(0);
    let max_row = (0..m).map(|w| graph.w_degree(w)).max().unwrap_or(0);
    let mut out = format!("{n} {m}\n{max_col} {max_row}\n");
    let join = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(out, "{}", join(&mut (0..n).map(|u| graph.u_degree(u))));
    let _ = writeln!(out, "{}", join(&mut (0..m).map(|w| graph.w_degree(w))));
    let mut list = |adj: &[usize], width: usize| {
        let mut line: Vec<usize> = adj.iter().map(|&x| x + 1).collect();
        line.resize(width, 0);
        let _ = writeln!(out, "{}", join(&mut line.into_iter()));
    };
    for u in 0..n {
        list(graph.u_neighbors(u), max_col);
    }
    for w in 0..m {
        list(graph.w_neighbors(w), max_row);
    }
    out
}

/// Header `bipartite n m`, then one 0-based `u w` pair per line. Blank lines
/// and `#` comments are ignored.
pub fn parse_edgelist(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(ParseError::UnexpectedEof("header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        ["bipartite", n, m] => match (n.parse(), m.parse()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => {
                return Err(ParseError::MalformedHeader(format!(
                    "line {line_no}: {header:?}"
                )))
            }
        },
        _ => {
            return Err(ParseError::MalformedHeader(format!(
                "line {line_no}: {header:?}"
            )))
        }
    };
    let mut seen = BTreeSet::new();
    for (line, content) in lines {
        let pair: Vec<&str> = content.split_whitespace().collect();
        let (u, w): (usize, usize) = match pair.as_slice() {
            [a, b] => match (a.parse(), b.parse()) {
                (Ok(u), Ok(w)) => (u, w),
                _ => return Err(malformed(line, content)),
            },
            _ => return Err(malformed(line, content)),
        };
        if u >= n || w >= m {
            let (index, limit) = if u >= n { (u, n) } else { (w, m) };
            return Err(ParseError::IndexOutOfRange {
                index,
                limit,
                context: format!("line {line}"),
            });
        }
        if !seen.insert((u, w)) {
            return Err(ParseError::DuplicateEdge { u, w });
        }
    }
    BipartiteGraph::new(n, m, seen).map_err(graph_error)
}

fn malformed(line: usize, content: &str) -> ParseError {
    ParseError::MalformedLine {
        line,
        content: content.to_string(),
    }
}

pub fn write_edgelist(graph: &BipartiteGraph) -> String {
    let mut out = format!("bipartite {} {}\n", graph.n(), graph.m());
    for (u, w) in graph.edges() {
        let _ = writeln!(out, "{u} {w}");
    }
    out
}
