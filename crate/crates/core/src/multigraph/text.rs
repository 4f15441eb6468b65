//! Plain-text graph format.
//!
//! ```text
//! # comment
//! vertices 4
//! 0 1 0
//! 2 3 1
//! ```
//!
//! The first non-comment line is `vertices N`; each further line is
//! `u v c` (endpoints and class label). `#` starts a comment anywhere on a
//! line.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::{ClassLabel, Edge, Multigraph};

pub fn parse_graph(src: &str) -> Result<Multigraph> {
    let mut num_vertices: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse { line: line_no, message };
        match num_vertices {
            None => {
                if fields.len() != 2 || fields[0] != "vertices" {
                    return Err(err(format!("expected 'vertices N', found '{line}'")));
                }
                let n = fields[1]
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex count '{}'", fields[1])))?;
                num_vertices = Some(n);
            }
            Some(n) => {
                if fields.len() != 3 {
                    return Err(err(format!("expected 'u v class', found '{line}'")));
                }
                let vertex = |s: &str| -> Result<usize> {
                    let x = s.parse::<usize>().map_err(|_| err(format!("bad vertex id '{s}'")))?;
                    if x >= n {
                        return Err(err(format!("vertex {x} out of range (graph has {n} vertices)")));
                    }
                    Ok(x)
                };
                let u = vertex(fields[0])?;
                let v = vertex(fields[1])?;
                let class = fields[2]
                    .parse::<ClassLabel>()
                    .map_err(|_| err(format!("bad class label '{}'", fields[2])))?;
                edges.push(Edge::new(u, v, class));
            }
        }
    }
    let n = num_vertices.ok_or(Error::Parse { line: 0, message: "missing 'vertices N' header".into() })?;
    Multigraph::new(n, edges)
}

/// Canonical rendering; `parse_graph(write_graph(g)) == g` and writing is a
/// fixed point of parse-then-write.
pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("vertices {}\n", g.num_vertices());
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.class).expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{k4_two_class, K4Case};
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let g = parse_graph("# K2 doubled\n\nvertices 2\n0 1 0 # first\n  1 0 3\n").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.edges(), &[Edge::new(0, 1, 0), Edge::new(1, 0, 3)]);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_graph("vertices 3\n0 1 0\n0 5 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph("# header missing\n0 1 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_graph("vertices 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn canonical_output() {
        let text = write_graph(&k4_two_class(K4Case::B));
        assert_eq!(text, "vertices 4\n0 1 0\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 0\n");
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..12, raw in proptest::collection::vec((0usize..100, 0usize..100, 0u32..4), 0..30)) {
            let edges: Vec<_> = raw.into_iter().map(|(u, v, c)| Edge::new(u % n, v % n, c)).collect();
            let g = Multigraph::new(n, edges).unwrap();
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph(&back), text);
        }
    }
}
