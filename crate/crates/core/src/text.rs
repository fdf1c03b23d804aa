//! Line-oriented text format for uniform hypergraphs.
//!
//! ```text
//! c optional comment
//! p h3 4 2
//! e 1 2 3
//! e 2 3 4
//! ```
//!
//! Labels are 1-based in the file and strictly increasing within an edge.
//! [`to_text`] emits no comments, the header first, and edges in
//! lexicographic order, so equal hypergraphs serialize to identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::HypergraphError;
use crate::hypergraph::Hypergraph;
use crate::Vertex;

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "p h{} {} {}", h.r(), h.n(), h.edge_count()).unwrap();
    for edge in h.edges() {
        out.push('e');
        for v in edge {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> HypergraphError {
    HypergraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_count(token: Option<&str>, what: &str, line: usize) -> Result<usize, HypergraphError> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("bad {what} `{token}`")))
}

pub fn from_text(text: &str) -> Result<Hypergraph, HypergraphError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Vec<Vertex>> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_error(line_no, "second header line"));
                }
                let kind = tokens
                    .next()
                    .ok_or_else(|| parse_error(line_no, "missing format tag"))?;
                let r = kind
                    .strip_prefix('h')
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| parse_error(line_no, format!("bad format tag `{kind}`")))?;
                let n = parse_count(tokens.next(), "vertex count", line_no)?;
                let m = parse_count(tokens.next(), "edge count", line_no)?;
                if tokens.next().is_some() {
                    return Err(parse_error(line_no, "trailing tokens after header"));
                }
                header = Some((r, n, m));
            }
            Some("e") => {
                let Some((r, n, _)) = header else {
                    return Err(parse_error(line_no, "edge before header"));
                };
                let mut edge = Vec::with_capacity(r);
                for token in tokens {
                    let label: usize = token
                        .parse()
                        .map_err(|_| parse_error(line_no, format!("bad vertex `{token}`")))?;
                    if label == 0 {
                        return Err(parse_error(line_no, "vertex labels are 1-based"));
                    }
                    if label > n {
                        return Err(HypergraphError::VertexOutOfRange {
                            vertex: label - 1,
                            n,
                        });
                    }
                    edge.push(label - 1);
                }
                if edge.len() != r {
                    return Err(HypergraphError::EdgeArity {
                        index: edges.len(),
                        expected: r,
                        found: edge.len(),
                    });
                }
                let mut sorted = edge.clone();
                sorted.sort_unstable();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    return Err(HypergraphError::RepeatedVertexInEdge {
                        index: edges.len(),
                        vertex: w[0],
                    });
                }
                if sorted != edge {
                    return Err(parse_error(line_no, "vertex labels must be strictly increasing"));
                }
                edges.push(edge);
            }
            Some(other) => {
                return Err(parse_error(line_no, format!("unknown line type `{other}`")));
            }
            None => unreachable!("blank lines skipped above"),
        }
    }

    let (r, n, m) = header.ok_or_else(|| parse_error(0, "missing header"))?;
    if edges.len() != m {
        return Err(parse_error(
            text.lines().count(),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::build(r, n, edges)
}

impl FromStr for Hypergraph {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        from_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_bit_exact() {
        let h = Hypergraph::build(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(to_text(&h), "p h3 3 1\ne 1 2 3\n");
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let h: Hypergraph = "c hello\np h3 4 1\n\ne 2 3 4\n".parse().unwrap();
        assert!(h.contains_edge(&[1, 2, 3]));
    }

    #[test]
    fn repeated_vertex_is_a_build_error() {
        assert!(matches!(
            from_text("p h3 3 1\ne 1 1 2"),
            Err(HypergraphError::RepeatedVertexInEdge { vertex: 0, .. })
        ));
    }

    #[test]
    fn malformed_inputs_report_lines() {
        let cases = [
            ("e 1 2 3\n", 1),
            ("p h3 3 1\np h3 3 1\n", 2),
            ("p x3 3 1\n", 1),
            ("p h3 4 1\ne 3 2 1\n", 2),
            ("p h3 4 1\ne 0 1 2\n", 2),
            ("p h3 4 1\nq\n", 2),
        ];
        for (text, line) in cases {
            match from_text(text) {
                Err(HypergraphError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(from_text("p h3 4 2\ne 1 2 3\n"), Err(HypergraphError::Parse { .. })));
        assert!(matches!(
            from_text("p h3 4 1\ne 1 2 5\n"),
            Err(HypergraphError::VertexOutOfRange { vertex: 4, n: 4 })
        ));
        assert!(matches!(
            from_text("p h3 4 1\ne 1 2\n"),
            Err(HypergraphError::EdgeArity { found: 2, .. })
        ));
    }
}
