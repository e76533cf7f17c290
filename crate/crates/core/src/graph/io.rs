//! Edge-list text format: one edge per line as two whitespace-separated
//! integer labels. Blank lines are skipped and `#` starts a comment.

use super::{Edge, Graph, Vertex};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut offset = 0usize;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        let mut fields = Vec::new();
        let mut pos = 0usize;
        for token in content.split_whitespace() {
            let at = start + pos + content[pos..].find(token).expect("token from this line");
            pos = at - start + token.len();
            fields.push((at, token));
        }
        match fields.as_slice() {
            [] => continue,
            [(pa, a), (pb, b)] => {
                let a = parse_label(a, *pa)?;
                let b = parse_label(b, *pb)?;
                if a == b {
                    return Err(Error::Parse { position: *pa, message: format!("loop at vertex {a}") });
                }
                if edges.iter().any(|&(x, y)| Edge::new(x, y) == Edge::new(a, b)) {
                    return Err(Error::Parse { position: *pa, message: format!("repeated edge {a} {b}") });
                }
                edges.push((a, b));
            }
            _ => {
                return Err(Error::Parse {
                    position: fields[0].0,
                    message: format!("expected two vertex labels, found {} fields", fields.len()),
                })
            }
        }
    }
    Graph::from_edges(edges)
}

fn parse_label(token: &str, position: usize) -> Result<Vertex> {
    token.parse().map_err(|_| Error::Parse { position, message: format!("invalid vertex label {token:?}") })
}

pub fn to_edge_list(g: &Graph) -> String {
    g.edges().iter().map(|e| format!("{} {}\n", e.u(), e.v())).collect()
}
