//! The signed edge-list file format and DOT export.
//!
//! Documents are line oriented: `#` starts a comment, the first content
//! line is `n m`, and each of the following `m` content lines is `u v s`
//! with 1-based endpoints and `s` one of `+` or `-`.

use crate::error::{Error, Result};
use crate::graph::{ParityLabelling, Sign, SignedGraph};
use std::collections::HashSet;
use std::fmt::Write as _;

/// Parses a signed edge-list document.
pub fn parse_signed_edge_list(text: &str) -> Result<SignedGraph> {
    let mut content = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    });

    let (header_line, header) = content.next().ok_or(Error::Syntax {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let mut fields = header.split_whitespace();
    let mut next_count = |what: &str| -> Result<usize> {
        fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::Syntax {
                line: header_line,
                message: format!("header needs `n m`, bad {what}"),
            })
    };
    let n = next_count("vertex count")?;
    let m = next_count("edge count")?;
    if fields.next().is_some() {
        return Err(Error::Syntax {
            line: header_line,
            message: "header needs exactly `n m`".into(),
        });
    }
    if n == 0 {
        return Err(Error::Parse {
            line: header_line,
            source: Box::new(Error::EmptyGraph),
        });
    }

    let mut edges: Vec<(usize, usize, Sign)> = Vec::with_capacity(m);
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (line, record) in content {
        if edges.len() == m {
            return Err(Error::CountMismatch {
                declared: m,
                found: m + 1,
            });
        }
        let fields: Vec<&str> = record.split_whitespace().collect();
        let [u_token, v_token, sign_token] = fields[..] else {
            return Err(Error::Syntax {
                line,
                message: format!("expected `u v sign`, got `{record}`"),
            });
        };
        let parse_vertex = |token: &str| -> Result<usize> {
            token.parse().map_err(|_| Error::Syntax {
                line,
                message: format!("bad vertex `{token}`"),
            })
        };
        let u = parse_vertex(u_token)?;
        let v = parse_vertex(v_token)?;
        let sign = match sign_token {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => {
                return Err(Error::Syntax {
                    line,
                    message: format!("bad sign `{other}`, expected + or -"),
                })
            }
        };
        let fail = |source: Error| Error::Parse {
            line,
            source: Box::new(source),
        };
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(fail(Error::VertexOutOfRange { vertex: w, n }));
            }
        }
        if u == v {
            return Err(fail(Error::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(Error::DuplicateEdge(u.min(v), u.max(v))));
        }
        edges.push((u - 1, v - 1, sign));
    }
    if edges.len() != m {
        return Err(Error::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    SignedGraph::from_edges(n, &edges)
}

/// Serializes a signed graph as an edge-list document; inverse of
/// [`parse_signed_edge_list`] on valid input.
pub fn format_signed_edge_list(s: &SignedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", s.n(), s.edge_count());
    for ((u, v), sign) in s.edges() {
        let _ = writeln!(out, "{} {} {}", u + 1, v + 1, sign);
    }
    out
}

/// Renders an undirected DOT document: positive edges solid, negative edges
/// dashed. Vertex names are the parity labels when a labelling is given,
/// 1-based ids otherwise. Output is byte-stable for a fixed input.
pub fn export_dot(s: &SignedGraph, labelling: Option<&ParityLabelling>) -> Result<String> {
    if let Some(f) = labelling {
        if f.n() != s.n() {
            return Err(Error::LabellingMismatch {
                expected: s.n(),
                found: f.n(),
            });
        }
    }
    let name = |v: usize| match labelling {
        Some(f) => f.label(v),
        None => v + 1,
    };
    let mut out = String::from("graph {\n");
    for v in 0..s.n() {
        let _ = writeln!(out, "  {};", name(v));
    }
    for ((u, v), sign) in s.edges() {
        let style = if sign.is_positive() {
            "solid"
        } else {
            "dashed"
        };
        let _ = writeln!(out, "  {} -- {} [style={}];", name(u), name(v), style);
    }
    out.push_str("}\n");
    Ok(out)
}
