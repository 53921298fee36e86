//! The `p caug` instance text format.
//!
//! ```text
//! # optional comments
//! p caug <n> <m>
//! e <u> <v> <cap>     (m lines, 1-based ids, u < v, cap >= 1)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{CapGraph, MAX_INPUT_CAPACITY};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_instance(text: &str) -> Result<CapGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = CapGraph::new(0);
    let mut seen = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second header line"));
                }
                if toks.next() != Some("caug") {
                    return Err(parse_err(line, "expected header `p caug <n> <m>`"));
                }
                let n: usize = number(toks.next(), line, "vertex count")?;
                let m: usize = number(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after header"));
                }
                header = Some((n, m));
                graph = CapGraph::new(n);
            }
            Some("e") => {
                let (n, m) = header.ok_or_else(|| parse_err(line, "edge line before header"))?;
                let u: usize = number(toks.next(), line, "endpoint")?;
                let v: usize = number(toks.next(), line, "endpoint")?;
                let cap: u64 = number(toks.next(), line, "capacity")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after edge"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line, format!("vertex id out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(line, format!("loop at vertex {u}")));
                }
                if u > v {
                    return Err(parse_err(line, format!("endpoints must satisfy u < v, got {u} {v}")));
                }
                if cap < 1 {
                    return Err(parse_err(line, "capacity must be at least 1"));
                }
                if cap > MAX_INPUT_CAPACITY {
                    return Err(parse_err(line, format!("capacity exceeds {MAX_INPUT_CAPACITY}")));
                }
                if graph.capacity(u - 1, v - 1) > 0 {
                    return Err(parse_err(line, format!("duplicate edge {u} {v}")));
                }
                seen += 1;
                if seen > m {
                    return Err(parse_err(line, format!("more than the declared {m} edges")));
                }
                graph.add_capacity(u - 1, v - 1, cap).expect("validated above");
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }

    let (_, m) = header.ok_or_else(|| parse_err(0, "missing header `p caug <n> <m>`"))?;
    if seen != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {seen}")));
    }
    Ok(graph)
}

pub fn write_instance(g: &CapGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p caug {} {}", g.n(), g.edge_count());
    for (u, v, c) in g.edges() {
        let _ = writeln!(out, "e {} {} {}", u + 1, v + 1, c);
    }
    out
}
