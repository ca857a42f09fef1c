//! Edge-list text format and the cycle dump format.
//!
//! ```text
//! # comment
//! p <n> <m>
//! a <tail> <head> <weight>
//! ```
//!
//! Node ids are 1-based in files and 0-based in memory; the conversion
//! happens here and nowhere else. Serialization emits the header followed by
//! the arcs in stored order, so parse-serialize round-trips byte-identically
//! on canonical files.

use ocm_core::{Arc, Cycle, WeightedDigraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `{expected}`, got `{got}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("line {line}: node id {id} outside 1..={n}")]
    NodeOutOfRange { line: usize, id: i64, n: usize },
    #[error("line {line}: weight `{got}` is not a 64-bit integer")]
    BadWeight { line: usize, got: String },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: second `p` header")]
    DuplicateHeader { line: usize },
    #[error("declared {declared} arcs but found {actual}")]
    ArcCountMismatch { declared: usize, actual: usize },
    #[error("header declares an empty graph")]
    EmptyGraph,
}

/// Parses the edge-list format. Comments (`#`) and blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<WeightedDigraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<Arc> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line: line_no });
                }
                let n = parse_count(tok.next(), line_no, "p <n> <m>", raw)?;
                let m = parse_count(tok.next(), line_no, "p <n> <m>", raw)?;
                if tok.next().is_some() {
                    return Err(malformed(line_no, "p <n> <m>", raw));
                }
                if n == 0 {
                    return Err(ParseError::EmptyGraph);
                }
                header = Some((n, m));
            }
            Some("a") => {
                let (n, m) = header.ok_or(ParseError::MissingHeader)?;
                if arcs.len() == m {
                    return Err(ParseError::ArcCountMismatch {
                        declared: m,
                        actual: arcs.len() + 1,
                    });
                }
                let tail = parse_node(tok.next(), line_no, n, raw)?;
                let head = parse_node(tok.next(), line_no, n, raw)?;
                let weight_tok = tok
                    .next()
                    .ok_or_else(|| malformed(line_no, "a <tail> <head> <weight>", raw))?;
                let weight: i64 = weight_tok.parse().map_err(|_| ParseError::BadWeight {
                    line: line_no,
                    got: weight_tok.to_string(),
                })?;
                if tok.next().is_some() {
                    return Err(malformed(line_no, "a <tail> <head> <weight>", raw));
                }
                arcs.push(Arc { tail, head, weight });
            }
            _ => {
                return Err(malformed(line_no, "p or a line", raw));
            }
        }
    }

    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if arcs.len() != m {
        return Err(ParseError::ArcCountMismatch {
            declared: m,
            actual: arcs.len(),
        });
    }
    Ok(WeightedDigraph::new(n, arcs).expect("endpoints validated during parse"))
}

fn malformed(line: usize, expected: &'static str, raw: &str) -> ParseError {
    ParseError::Malformed {
        line,
        expected,
        got: raw.trim().to_string(),
    }
}

fn parse_count(
    tok: Option<&str>,
    line: usize,
    expected: &'static str,
    raw: &str,
) -> Result<usize, ParseError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(line, expected, raw))
}

fn parse_node(tok: Option<&str>, line: usize, n: usize, raw: &str) -> Result<u32, ParseError> {
    let t = tok.ok_or_else(|| malformed(line, "a <tail> <head> <weight>", raw))?;
    let id: i64 = t
        .parse()
        .map_err(|_| malformed(line, "a <tail> <head> <weight>", raw))?;
    if id < 1 || id as usize > n {
        return Err(ParseError::NodeOutOfRange { line, id, n });
    }
    Ok((id - 1) as u32)
}

/// Emits the canonical edge-list text: header, then arcs in stored order.
///
/// Only graphs with integer weights (denominator 1) have a file form.
pub fn serialize_edge_list(g: &WeightedDigraph) -> String {
    assert_eq!(g.denominator(), 1, "only integer-weight graphs serialize");
    let mut out = String::new();
    out.push_str(&format!("p {} {}\n", g.node_count(), g.arc_count()));
    for arc in g.arcs() {
        out.push_str(&format!(
            "a {} {} {}\n",
            arc.tail + 1,
            arc.head + 1,
            arc.weight
        ));
    }
    out
}

/// One line of the cycle dump: `c <w(C)> <|C|> <v1> <v2> ... <v1>`,
/// 1-based node ids, the start node repeated at the end.
pub fn format_cycle_line(g: &WeightedDigraph, cycle: &Cycle) -> String {
    assert_eq!(g.denominator(), 1, "cycle dumps use integer weights");
    let mut line = format!("c {} {}", cycle.raw_weight(), cycle.length());
    let nodes = cycle.nodes(g);
    for v in &nodes {
        line.push_str(&format!(" {}", v + 1));
    }
    line.push_str(&format!(" {}", nodes[0] + 1));
    line
}
