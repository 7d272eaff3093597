//! Text and DOT formats. Vertex labels in every external format are 1-based.
//!
//! ```text
//! n 5            digraph n 3       n 4 c 2
//! 1 2            1 -> 2            1 2 0
//! 2 3            2 -> 3            1 3 1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, EdgeColoring, SimpleGraph};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("expected a number, found {token:?}")))
}

fn parse_label(line: usize, token: &str, n: usize) -> Result<usize> {
    let label = parse_num(line, token)?;
    if label == 0 || label > n {
        return Err(parse_err(line, format!("vertex {label} outside 1..={n}")));
    }
    Ok(label - 1)
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keywords: &[&str],
) -> Result<(usize, Vec<usize>)> {
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let mut values = Vec::new();
    let mut rest = tokens.as_slice();
    for &kw in keywords {
        match rest {
            [k, tail @ ..] if *k == kw => rest = tail,
            _ => {
                return Err(parse_err(
                    line,
                    format!("expected header {:?}", keywords.join(" ")),
                ))
            }
        }
        if kw == "digraph" {
            continue;
        }
        match rest {
            [v, tail @ ..] => {
                values.push(parse_num(line, v)?);
                rest = tail;
            }
            [] => return Err(parse_err(line, format!("missing value after {kw:?}"))),
        }
    }
    if !rest.is_empty() {
        return Err(parse_err(line, "trailing tokens in header"));
    }
    Ok((line, values))
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let (_, header) = parse_header(&mut lines, &["n"])?;
    let n = header[0];
    let mut edges = Vec::new();
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = tokens.as_slice() else {
            return Err(parse_err(line, "expected \"u v\""));
        };
        let (u, v) = (parse_label(line, u, n)?, parse_label(line, v, n)?);
        if u == v {
            return Err(parse_err(line, "loops are not allowed in a simple graph"));
        }
        edges.push((u, v));
    }
    SimpleGraph::from_edges(n, edges)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (_, header) = parse_header(&mut lines, &["digraph", "n"])?;
    let n = header[0];
    let mut arcs = Vec::new();
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [u, "->", v] = tokens.as_slice() else {
            return Err(parse_err(line, "expected \"u -> v\""));
        };
        arcs.push((parse_label(line, u, n)?, parse_label(line, v, n)?));
    }
    Digraph::from_arcs(n, arcs)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph n {}\n", d.vertex_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{} -> {}", u + 1, v + 1);
    }
    out
}

/// Colours are written 0-based, vertices 1-based.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut lines = content_lines(text);
    let (_, header) = parse_header(&mut lines, &["n", "c"])?;
    let (n, c) = (header[0], header[1]);
    let mut entries = Vec::new();
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [u, v, color] = tokens.as_slice() else {
            return Err(parse_err(line, "expected \"u v color\""));
        };
        let (u, v) = (parse_label(line, u, n)?, parse_label(line, v, n)?);
        if u == v {
            return Err(parse_err(line, "an edge needs two distinct vertices"));
        }
        entries.push((u, v, parse_num(line, color)?));
    }
    EdgeColoring::from_entries(n, c, entries)
}

pub fn write_coloring(coloring: &EdgeColoring) -> String {
    let mut out = format!(
        "n {} c {}\n",
        coloring.vertex_count(),
        coloring.color_count()
    );
    for (u, v, c) in coloring.entries() {
        let _ = writeln!(out, "{} {} {}", u + 1, v + 1, c);
    }
    out
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('"', "\\\""))
}

/// Options shared by the DOT writers.
#[derive(Default)]
pub struct DotStyle<'a> {
    pub name: &'a str,
    /// Vertex label override; 1-based numbers when absent.
    pub labels: Option<&'a dyn Fn(usize) -> String>,
    /// Per-edge colour attribute, if any.
    pub edge_color: Option<&'a dyn Fn(usize, usize) -> Option<String>>,
}

impl DotStyle<'_> {
    fn label(&self, v: usize) -> String {
        match self.labels {
            Some(f) => f(v),
            None => (v + 1).to_string(),
        }
    }

    fn attrs(&self, u: usize, v: usize) -> String {
        match self.edge_color.and_then(|f| f(u, v)) {
            Some(color) => format!(" [color={color}, penwidth=2]"),
            None => String::new(),
        }
    }
}

pub fn graph_to_dot(g: &SimpleGraph, style: &DotStyle) -> String {
    let name = if style.name.is_empty() {
        "G"
    } else {
        style.name
    };
    let mut out = format!("graph {} {{\n", quote(name));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {};", quote(&style.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {}{};",
            quote(&style.label(u)),
            quote(&style.label(v)),
            style.attrs(u, v)
        );
    }
    out.push_str("}\n");
    out
}

pub fn digraph_to_dot(d: &Digraph, style: &DotStyle) -> String {
    let name = if style.name.is_empty() {
        "D"
    } else {
        style.name
    };
    let mut out = format!("digraph {} {{\n", quote(name));
    for v in 0..d.vertex_count() {
        let _ = writeln!(out, "  {};", quote(&style.label(v)));
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(
            out,
            "  {} -> {}{};",
            quote(&style.label(u)),
            quote(&style.label(v)),
            style.attrs(u, v)
        );
    }
    out.push_str("}\n");
    out
}

/// Complete graph with every edge drawn in its colour (`palette[color]`).
pub fn coloring_to_dot(coloring: &EdgeColoring, palette: &[&str]) -> String {
    let k = crate::graph::complete_graph(coloring.vertex_count());
    let color = |u: usize, v: usize| {
        let c = coloring.color(u, v);
        Some(
            palette
                .get(c)
                .map_or_else(|| c.to_string(), |s| s.to_string()),
        )
    };
    graph_to_dot(
        &k,
        &DotStyle {
            name: "coloring",
            edge_color: Some(&color),
            ..Default::default()
        },
    )
}
