//! Text formats: edge lists, graph6 and coloring files.
//!
//! Edge list: a line `n m`, then `m` lines `u v` with 0-based vertices.
//! graph6: one line, order byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order, six bits per byte offset by 63,
//! zero-padded. The optional `>>graph6<<` header is rejected.
//! Coloring: one line `u v c` per edge of the graph.
//!
//! All formats are ASCII with LF line endings and no comments.

use std::fmt;
use std::str::FromStr;

use rainbow_core::{to_graph6, EdgeColoring, Graph, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown format `{other}` (expected edgelist or graph6)")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

/// A syntax or content error with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Splits into lines, rejecting CR and blank lines. A single trailing LF is
/// allowed.
fn lines(text: &str) -> Result<Vec<&str>, ParseError> {
    if let Some(pos) = text.find('\r') {
        let line = text[..pos].matches('\n').count() + 1;
        let column = pos - text[..pos].rfind('\n').map_or(0, |p| p + 1) + 1;
        return Err(err(
            line,
            column,
            "carriage return; files must use LF line endings",
        ));
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(err(1, 1, "empty input"));
    }
    let out: Vec<&str> = body.split('\n').collect();
    if let Some(i) = out.iter().position(|l| l.trim().is_empty()) {
        return Err(err(i + 1, 1, "blank line"));
    }
    Ok(out)
}

/// Whitespace-separated unsigned integers with their 1-based columns.
fn numbers(line: &str, line_no: usize, expected: usize, what: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::with_capacity(expected);
    let mut rest = line;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start_matches([' ', '\t']);
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            break;
        }
        let len = trimmed.find([' ', '\t']).unwrap_or(trimmed.len());
        let token = &trimmed[..len];
        let column = offset + 1;
        if out.len() == expected {
            return Err(err(
                line_no,
                column,
                format!("unexpected token `{token}`; expected {what}"),
            ));
        }
        let value = token.parse::<usize>().map_err(|_| {
            err(
                line_no,
                column,
                format!("`{token}` is not a non-negative integer"),
            )
        })?;
        out.push(value);
        offset += len;
        rest = &trimmed[len..];
    }
    if out.len() < expected {
        return Err(err(line_no, line.len() + 1, format!("expected {what}")));
    }
    Ok(out)
}

fn column_of(line: &str, index: usize) -> usize {
    let mut col = 1;
    let mut seen = 0;
    let mut in_token = false;
    for (i, ch) in line.char_indices() {
        let ws = ch == ' ' || ch == '\t';
        if !ws && !in_token {
            if seen == index {
                return i + 1;
            }
            seen += 1;
        }
        in_token = !ws;
        col = i + 2;
    }
    col
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let lines = lines(text)?;
    let header = numbers(lines[0], 1, 2, "`n m`")?;
    let (n, m) = (header[0], header[1]);
    if n == 0 {
        return Err(err(1, 1, "a graph needs at least one vertex"));
    }
    if n > MAX_ORDER {
        return Err(err(
            1,
            1,
            format!("order {n} exceeds the cap of {MAX_ORDER} vertices"),
        ));
    }
    if lines.len() - 1 != m {
        let line = lines.len().min(m + 1) + 1;
        return Err(err(
            line.min(lines.len()),
            1,
            format!("header announces {m} edges, found {}", lines.len() - 1),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = vec![[false; MAX_ORDER]; MAX_ORDER];
    for (i, line) in lines[1..].iter().enumerate() {
        let line_no = i + 2;
        let uv = numbers(line, line_no, 2, "`u v`")?;
        let (u, v) = (uv[0], uv[1]);
        for (idx, w) in [u, v].into_iter().enumerate() {
            if w >= n {
                return Err(err(
                    line_no,
                    column_of(line, idx),
                    format!("vertex {w} out of range 0..{n}"),
                ));
            }
        }
        if u == v {
            return Err(err(line_no, 1, format!("loop at vertex {u}")));
        }
        if seen[u][v] {
            return Err(err(line_no, 1, format!("duplicate edge {{{u},{v}}}")));
        }
        seen[u][v] = true;
        seen[v][u] = true;
        edges.push((u, v));
    }
    Graph::new(n, &edges).map_err(|e| err(1, 1, e.to_string()))
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let lines = lines(text)?;
    if lines.len() > 1 {
        return Err(err(2, 1, "graph6 input holds exactly one graph"));
    }
    let line = lines[0].as_bytes();
    if line.starts_with(b">>") {
        return Err(err(1, 1, "the >>graph6<< header is not accepted"));
    }
    let first = line[0];
    if !(63..=126).contains(&first) {
        return Err(err(
            1,
            1,
            format!("byte {first:#04x} is outside the graph6 range 63..=126"),
        ));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(1, 1, "a graph needs at least one vertex"));
    }
    if n > MAX_ORDER {
        return Err(err(
            1,
            1,
            format!("order {n} exceeds the cap of {MAX_ORDER} vertices"),
        ));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let body = &line[1..];
    if body.len() != expected {
        let column = 1 + body.len().min(expected) + 1;
        return Err(err(
            1,
            column,
            format!("order {n} needs {expected} data bytes, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for (j, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(
                1,
                j + 2,
                format!("byte {byte:#04x} is outside the graph6 range 63..=126"),
            ));
        }
        let value = byte - 63;
        for k in (0..6).rev() {
            let set = value >> k & 1 == 1;
            if bit >= bits {
                if set {
                    return Err(err(1, j + 2, "padding bits must be zero"));
                }
            } else if set {
                // Column-order index `bit` maps to the pair (i, c) with i < c.
                let mut c = 1;
                while c * (c + 1) / 2 <= bit {
                    c += 1;
                }
                let i = bit - c * (c - 1) / 2;
                edges.push((i, c));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).map_err(|e| err(1, 1, e.to_string()))
}

pub fn render_graph6(g: &Graph) -> String {
    format!("{}\n", to_graph6(g))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => render_edge_list(g),
        GraphFormat::Graph6 => render_graph6(g),
    }
}

/// Reads `u v c` triples. Matching them against a graph is left to
/// [`EdgeColoring::from_triples`].
pub fn parse_coloring_triples(text: &str) -> Result<Vec<(usize, usize, usize)>, ParseError> {
    lines(text)?
        .iter()
        .enumerate()
        .map(|(i, line)| numbers(line, i + 1, 3, "`u v c`").map(|t| (t[0], t[1], t[2])))
        .collect()
}

pub fn render_coloring(c: &EdgeColoring) -> String {
    c.triples().map(|(u, v, k)| format!("{u} {v} {k}\n")).collect()
}
