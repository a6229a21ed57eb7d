use std::fmt::Write as _;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;

/// A graph file format. There is no autodetection; callers name the format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    /// One `u v` pair of 1-based labels per line, optional `n <count>` header.
    EdgeList,
    /// The standard printable graph6 encoding.
    Graph6,
    /// DIMACS `p edge` with `e u v` lines.
    Dimacs,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::EdgeList, Format::Graph6, Format::Dimacs];

    pub fn label(self) -> &'static str {
        match self {
            Format::EdgeList => "edge-list",
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Format::ALL.into_iter().find(|f| f.label() == label)
    }

    pub fn parse(self, text: &str) -> Result<Graph> {
        match self {
            Format::EdgeList => parse_edge_list(text),
            Format::Graph6 => parse_graph6(text),
            Format::Dimacs => parse_dimacs(text),
        }
    }

    pub fn serialize(self, g: &Graph) -> String {
        match self {
            Format::EdgeList => serialize_edge_list(g),
            Format::Graph6 => serialize_graph6(g) + "\n",
            Format::Dimacs => serialize_dimacs(g),
        }
    }
}

/// A graph together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    pub format: Format,
    pub graph: Graph,
}

impl GraphDocument {
    pub fn parse(name: impl Into<String>, format: Format, text: &str) -> Result<Self> {
        Ok(GraphDocument { name: name.into(), format, graph: format.parse(text)? })
    }

    pub fn to_text(&self) -> String {
        self.format.serialize(&self.graph)
    }
}

fn parse_label(token: &str, line: usize) -> Result<usize> {
    let label: usize = token.parse().map_err(|_| Error::parse(line, format!("`{token}` is not a vertex label")))?;
    if label == 0 {
        return Err(Error::parse(line, "vertex labels start at 1"));
    }
    if label > MAX_VERTICES {
        return Err(Error::VertexCount(label));
    }
    Ok(label)
}

fn build(n: usize, edges: &[(usize, usize, usize)]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &(u, v, line) in edges {
        if u > n || v > n {
            return Err(Error::parse(line, format!("label {} exceeds the declared {n} vertices", u.max(v))));
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        g.add_edge(u - 1, v - 1)?;
    }
    Ok(g)
}

/// Parses `u v` lines of 1-based labels. Blank lines and `#` comments are
/// skipped; a leading `n <count>` line fixes the vertex count, which
/// otherwise is the largest label. Duplicate edges are collapsed.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(Error::parse(line, "the `n` header must come first and only once"));
                }
                let n: usize = count.parse().map_err(|_| Error::parse(line, format!("`{count}` is not a count")))?;
                if n > MAX_VERTICES {
                    return Err(Error::VertexCount(n));
                }
                declared = Some(n);
            }
            [u, v] => edges.push((parse_label(u, line)?, parse_label(v, line)?, line)),
            _ => return Err(Error::parse(line, "expected `u v` or `n <count>`")),
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v)).max().unwrap_or(0));
    if n == 0 {
        return Err(Error::parse(1, "no vertices"));
    }
    build(n, &edges)
}

/// `n <count>` followed by one line per edge, smaller label first.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses DIMACS: `c` comment lines, one `p edge <n> <m>` line, then `m`
/// lines `e u v`.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut problem: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.as_slice() {
            [] | ["c", ..] => {}
            ["p", "edge", n, m] => {
                if problem.is_some() {
                    return Err(Error::parse(line, "second problem line"));
                }
                let n: usize = n.parse().map_err(|_| Error::parse(line, format!("`{n}` is not a count")))?;
                let m: usize = m.parse().map_err(|_| Error::parse(line, format!("`{m}` is not a count")))?;
                if n > MAX_VERTICES {
                    return Err(Error::VertexCount(n));
                }
                problem = Some((n, m, line));
            }
            ["p", ..] => return Err(Error::parse(line, "only the `p edge <n> <m>` problem line is supported")),
            ["e", u, v] => {
                if problem.is_none() {
                    return Err(Error::parse(line, "edge before the problem line"));
                }
                edges.push((parse_label(u, line)?, parse_label(v, line)?, line));
            }
            _ => return Err(Error::parse(line, "expected `c`, `p edge` or `e u v`")),
        }
    }
    let Some((n, m, line)) = problem else {
        return Err(Error::parse(1, "missing `p edge` line"));
    };
    if edges.len() != m {
        return Err(Error::parse(line, format!("declared {m} edges, found {}", edges.len())));
    }
    if n == 0 {
        return Err(Error::parse(line, "no vertices"));
    }
    build(n, &edges)
}

pub fn serialize_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses one graph6 string (an optional `>>graph6<<` prefix and
/// surrounding whitespace are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::parse(1, format!("byte {bad} is outside the graph6 range 63..126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse(1, "empty graph6 string")),
        [126, 126, ..] => return Err(Error::VertexCount(usize::MAX)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(1, "truncated graph6 size field"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - 63), rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(1, format!("graph6 body has {} bytes, expected {expected} for n = {n}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::parse(1, "nonzero graph6 padding bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// The standard graph6 encoding (no header, no newline).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("1 2\n2 3").unwrap(), path(3));
        let text = "# G_C\n1 2\n1 6\n2 3\n2 4\n3 4\n4 5\n5 6\n3 5\n1 5\n";
        assert_eq!(parse_edge_list(text).unwrap(), uniformly_well_covered());
        assert!(matches!(parse_edge_list("1 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("1 2\n2 x"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_edge_list("1 65"), Err(Error::VertexCount(65)));
        assert_eq!(parse_edge_list("n 4\n1 2\n2 1\n").unwrap().n(), 4);
        assert!(parse_edge_list("n 2\n1 3").is_err());
        assert!(parse_edge_list("").is_err());
        assert_eq!(parse_edge_list("n 3\n").unwrap(), Graph::empty(3).unwrap());
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(serialize_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(serialize_graph6(&path(3)), "Bg");
        assert_eq!(serialize_graph6(&complete(3)), "Bw");
        assert_eq!(serialize_graph6(&complete(4)), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), complete(4));
        for (_, g) in named() {
            assert_eq!(parse_graph6(&serialize_graph6(&g)).unwrap(), g);
        }
        assert!(parse_graph6("E?~").is_err());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Bx").is_err());
        let big = cycle(64);
        let text = serialize_graph6(&big);
        assert!(text.starts_with("~?@"));
        assert_eq!(parse_graph6(&text).unwrap(), big);
        assert_eq!(parse_graph6(&serialize_graph6(&cycle(63))).unwrap(), cycle(63));
    }

    #[test]
    fn dimacs_examples() {
        let c4 = cycle(4);
        assert_eq!(serialize_dimacs(&c4), "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
        assert_eq!(parse_dimacs("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap(), c4);
        assert!(parse_dimacs("p edge 4 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("p col 4 0\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn every_format_round_trips() {
        for (name, g) in named() {
            for format in Format::ALL {
                let doc = GraphDocument { name: name.into(), format, graph: g.clone() };
                assert_eq!(GraphDocument::parse(name, format, &doc.to_text()).unwrap(), doc);
            }
        }
    }
}
