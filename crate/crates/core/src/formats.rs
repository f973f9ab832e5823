//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows the nauty definition: an optional `>>graph6<<` header,
//! the vertex count `N(n)`, then the upper triangle of the adjacency matrix
//! taken column by column (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed six
//! bits per byte, big-endian, zero-padded, each byte offset by 63.
//!
//! The edge list format is a line `n m` followed by `m` lines `u v`,
//! vertices 0-indexed.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: {msg} at byte {pos}")]
    Graph6 { pos: usize, msg: String },
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn g6_err(pos: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Graph6 {
        pos,
        msg: msg.into(),
    }
}

/// Encodes `g` as graph6, without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string. Surrounding whitespace and the optional
/// header are accepted; anything else malformed is rejected with the
/// offending byte position.
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim();
    let (offset, body) = match s.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, s.as_bytes()),
    };
    if body.is_empty() {
        return Err(g6_err(offset, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(offset + i, format!("invalid byte {b:#04x}")));
        }
    }
    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.len() >= 2 && body[1] == 126 {
            return Err(g6_err(offset + 1, "8-byte vertex counts are not supported"));
        }
        if body.len() < 4 {
            return Err(g6_err(offset + body.len(), "truncated vertex count"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(g6_err(offset, format!("non-canonical long form for n={n}")));
        }
        (n, 4)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() - pos != nbytes {
        return Err(g6_err(
            offset + body.len().min(pos + nbytes),
            format!(
                "expected {nbytes} edge bytes for n={n}, found {}",
                body.len() - pos
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += nbytes;
    if nbits % 6 != 0 {
        let last = body[pos - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(g6_err(offset + pos - 1, "nonzero padding bits"));
        }
    }
    if !edges.is_empty() {
        g = Graph::from_edge_list(n, &edges)?;
    }
    Ok(g)
}

/// Parses a file of graph6 strings, one per line; blank lines are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            from_graph6(l).map_err(|e| match e {
                FormatError::Graph6 { pos, msg } => g6_err(pos, format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect()
}

/// Renders the edge-list format, edges ordered with `u < v`.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the edge-list format. Blank lines are ignored; line numbers in
/// errors are 1-based.
pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(FormatError::EdgeList {
        line: 1,
        msg: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(FormatError::EdgeList {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n || u == v {
            return Err(FormatError::EdgeList {
                line,
                msg: format!("invalid edge ({u},{v}) for n={n}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeList {
            line: text.lines().count().max(1),
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize), FormatError> {
    let err = |msg: String| FormatError::EdgeList { line, msg };
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize, FormatError> {
        let tok = it
            .next()
            .ok_or_else(|| err(format!("expected two integers, got {l:?}")))?;
        tok.parse()
            .map_err(|_| err(format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(err(format!("expected two integers, got {l:?}")));
    }
    Ok((a, b))
}

/// Parses either format: edge list if the first non-blank line is two
/// integers, otherwise a single graph6 string.
pub fn parse_graph_auto(text: &str) -> Result<Graph, FormatError> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let looks_like_edge_list = first.split_whitespace().count() == 2
        && first
            .split_whitespace()
            .all(|t| t.chars().all(|c| c.is_ascii_digit()));
    if looks_like_edge_list {
        from_edge_list(text)
    } else {
        from_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    // Reference strings as printed by nauty's geng/showg.
    #[test]
    fn graph6_known_strings() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&k3), "Bw");
        assert_eq!(to_graph6(&cycle(4)), "Cl");
        assert_eq!(
            from_graph6("Cr").unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)]
        );
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(
            to_graph6(&Graph::from_edge_list(2, &[(0, 1)]).unwrap()),
            "A_"
        );
        // Petersen graph
        let pet = from_graph6("IheA@GUAo").unwrap();
        assert_eq!(pet.order(), 10);
        assert_eq!(pet.size(), 15);
        assert_eq!(pet.regular_degree(), Some(3));
    }

    #[test]
    fn graph6_long_form() {
        let g = cycle(64);
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(s.len(), 4 + (64 * 63 / 2usize).div_ceil(6));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let g = cycle(63);
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_header_and_whitespace() {
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap().size(), 3);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            from_graph6(""),
            Err(FormatError::Graph6 { pos: 0, .. })
        ));
        assert!(matches!(
            from_graph6("Cr?"),
            Err(FormatError::Graph6 { .. })
        ));
        assert!(matches!(from_graph6("C"), Err(FormatError::Graph6 { .. })));
        assert!(matches!(
            from_graph6("B "),
            Err(FormatError::Graph6 { pos: 1, .. })
        ));
        // "Bw" has three data bits; setting a padding bit must fail
        assert!(matches!(
            from_graph6("Bx"),
            Err(FormatError::Graph6 { pos: 1, .. })
        ));
        // more than 64 vertices parses as graph6 but exceeds the cap
        assert!(matches!(
            from_graph6(&format!("~?A?{}", "?".repeat(65 * 64 / 12 + 1))),
            Err(FormatError::Graph6 { .. }) | Err(FormatError::Graph(_))
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5);
        let text = to_edge_list(&g);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            from_edge_list(""),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            from_edge_list("3 1\n0 3\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            from_edge_list("3 2\n0 1\n"),
            Err(FormatError::EdgeList { .. })
        ));
        assert!(matches!(
            from_edge_list("3 1\n0 1\n1 2\n"),
            Err(FormatError::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            from_edge_list("3 1\n0 x\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
    }

    #[test]
    fn autodetect() {
        assert_eq!(parse_graph_auto("Bw").unwrap().size(), 3);
        assert_eq!(parse_graph_auto("\n3 1\n0 2\n").unwrap().size(), 1);
    }
}
