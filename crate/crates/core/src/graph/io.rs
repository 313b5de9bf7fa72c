//! Edge-list text format.
//!
//! One edge per line as two decimal 0-based vertex ids separated by
//! whitespace. Blank lines and lines starting with `#` are ignored, except
//! for a `# vertices N` line, which pads the vertex count so that trailing
//! isolated vertices survive a round trip.

use super::{Edge, Graph};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write;

const VERTICES_DIRECTIVE: &str = "# vertices ";

pub fn load_graph(text: &str) -> Result<Graph> {
    let mut edges = BTreeSet::new();
    let mut n = 0usize;
    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix(VERTICES_DIRECTIVE) {
            n = n.max(parse_id(rest.trim(), line_no)?);
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (parse_id(a, line_no)?, parse_id(b, line_no)?),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two vertex ids, found {line:?}"),
                })
            }
        };
        let e = Edge::try_new(a, b).ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("self-loop at vertex {a}"),
        })?;
        if !edges.insert(e) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate edge {e}"),
            });
        }
        n = n.max(e.v() + 1);
    }
    Ok(Graph::from_edge_set(n, edges))
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            message: format!("{token:?} is not a vertex id"),
        });
    }
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("vertex id {token} is out of range"),
    })
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let implied = g.edges().map(|e| e.v() + 1).max().unwrap_or(0);
    if g.vertex_count() > implied {
        let _ = writeln!(out, "{VERTICES_DIRECTIVE}{}", g.vertex_count());
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};
    use proptest::prelude::*;

    #[test]
    fn loads_path() {
        let g = load_graph("0 1\n1 2").unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn serializes_triangle_as_three_lines() {
        let text = serialize_graph(&complete(3));
        assert_eq!(text.lines().count(), 3);
        assert_eq!(load_graph(&text).unwrap(), complete(3));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = load_graph("# a comment\n\n0 1\n   \n# another\n2 1\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_self_loop_with_line_number() {
        match load_graph("0 0") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 1);
                assert!(message.contains("self-loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicates_and_garbage() {
        assert!(matches!(
            load_graph("0 1\n1 0"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_graph("0 1\n0"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_graph("0 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            load_graph("a b"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            load_graph("-1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn keeps_trailing_isolated_vertices() {
        let g = Graph::from_edges(7, [(0, 1)]).unwrap();
        let text = serialize_graph(&g);
        assert!(text.starts_with("# vertices 7\n"));
        assert_eq!(load_graph(&text).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..20).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..60).prop_map(move |pairs| {
                let mut g = Graph::empty(n);
                for (a, b) in pairs {
                    let _ = g.add_edge(a, b);
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(g in arb_graph()) {
            prop_assert_eq!(load_graph(&serialize_graph(&g)).unwrap(), g);
        }
    }
}
