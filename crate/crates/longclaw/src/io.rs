//! Text format for weighted graph instances.
//!
//! ```text
//! c optional comment lines
//! p <n> <m>
//! e <u> <v>        1-based endpoints, one line per edge
//! w <v> <weight>   optional; weights default to 1
//! ```
//!
//! `write_graph` emits a canonical form (sorted edge lines, weight lines
//! only for non-default weights), so write∘read is the identity on it.

use crate::error::{Error, Result};
use crate::graph::{Graph, Weights};

pub fn read_graph(text: &str) -> Result<(Graph, Weights)> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut weight_lines: Vec<(usize, u64)> = Vec::new();

    let err = |line: usize, msg: String| Error::Parse { line, msg };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        let fields: Vec<&str> = parts.collect();
        match tag {
            "p" => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate header".into()));
                }
                if fields.len() != 2 {
                    return Err(err(line_no, format!("expected `p <n> <m>`, got `{line}`")));
                }
                let nv: usize = fields[0]
                    .parse()
                    .map_err(|e| err(line_no, format!("bad vertex count: {e}")))?;
                declared_m = fields[1]
                    .parse()
                    .map_err(|e| err(line_no, format!("bad edge count: {e}")))?;
                n = Some(nv);
            }
            "e" => {
                let n = n.ok_or_else(|| err(line_no, "edge before header".into()))?;
                if fields.len() != 2 {
                    return Err(err(line_no, format!("expected `e <u> <v>`, got `{line}`")));
                }
                let u: usize = fields[0]
                    .parse()
                    .map_err(|e| err(line_no, format!("bad endpoint: {e}")))?;
                let v: usize = fields[1]
                    .parse()
                    .map_err(|e| err(line_no, format!("bad endpoint: {e}")))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(line_no, format!("endpoint outside 1..={n}")));
                }
                if u == v {
                    return Err(err(line_no, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            "w" => {
                let n = n.ok_or_else(|| err(line_no, "weight before header".into()))?;
                if fields.len() != 2 {
                    return Err(err(line_no, format!("expected `w <v> <weight>`, got `{line}`")));
                }
                let v: usize = fields[0]
                    .parse()
                    .map_err(|e| err(line_no, format!("bad vertex: {e}")))?;
                if v == 0 || v > n {
                    return Err(err(line_no, format!("vertex outside 1..={n}")));
                }
                let wt: u64 = fields[1]
                    .parse()
                    .map_err(|e| err(line_no, format!("bad weight (non-negative integer required): {e}")))?;
                weight_lines.push((v - 1, wt));
            }
            _ => return Err(err(line_no, format!("unknown line tag `{tag}`"))),
        }
    }

    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing `p` header".into()))?;
    if edges.len() != declared_m {
        return Err(err(
            text.lines().count().max(1),
            format!("header declares {declared_m} edges, found {}", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })?;
    let mut w = Weights::unit(n);
    for (v, wt) in weight_lines {
        w.set(v, wt);
    }
    Ok((g, w))
}

pub fn write_graph(g: &Graph, w: &Weights) -> String {
    let mut out = String::new();
    let mut edges = g.edges();
    edges.sort_unstable();
    out.push_str(&format!("p {} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    for v in 0..g.n() {
        if w.of(v) != 1 {
            out.push_str(&format!("w {} {}\n", v + 1, w.of(v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_example() {
        let (g, w) = read_graph("p 3 2\ne 1 2\ne 2 3\nw 1 5\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert_eq!(w.of(0), 5);
        assert_eq!(w.of(1), 1);
    }

    #[test]
    fn parses_empty_graph() {
        let (g, _) = read_graph("p 0 0\n").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn rejects_malformed_edge() {
        let e = read_graph("p 3 1\ne 1\n").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn rejects_weight_overflow() {
        let e = read_graph("p 1 0\nw 1 99999999999999999999999\n").unwrap_err();
        assert!(e.to_string().contains("weight"));
    }

    #[test]
    fn round_trip_is_identity_on_canonical_form() {
        let text = "p 4 3\ne 1 2\ne 1 3\ne 2 4\nw 3 7\n";
        let (g, w) = read_graph(text).unwrap();
        let written = write_graph(&g, &w);
        assert_eq!(written, text);
        let (g2, w2) = read_graph(&written).unwrap();
        assert_eq!(write_graph(&g2, &w2), text);
    }
}
