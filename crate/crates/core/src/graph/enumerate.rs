//! Enumeration of small graphs up to isomorphism.
//!
//! Graphs on exactly `j` vertices are generated from those on `j - 1`
//! vertices by adding a vertex with every possible neighborhood and keeping
//! one representative per canonical form. Levels are cached process-wide.

use std::collections::BTreeSet;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use super::{Edge, Graph, Vertex};
use crate::error::{invalid, limit, Result};

/// Default vertex cap for [`enumerate_graphs`].
pub const DEFAULT_VERTEX_CAP: usize = 8;
/// Hard vertex cap, reachable only through [`enumerate_graphs_capped`].
pub const MAX_VERTEX_CAP: usize = 9;
/// Edge cap for [`enumerate_graphs_by_edges`].
pub const MAX_EDGE_CAP: usize = 10;

/// Every graph on at most `n` vertices without isolated vertices, once per
/// isomorphism class, ordered by (vertex count, edge count, canonical code).
/// Graphs are returned in canonical labeling on `0..j-1`.
pub fn enumerate_graphs(n: usize, filter: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    enumerate_graphs_capped(n, DEFAULT_VERTEX_CAP, filter)
}

pub fn enumerate_graphs_capped(n: usize, cap: usize, filter: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    if cap > MAX_VERTEX_CAP {
        return invalid(format!("enumeration cap may not exceed {MAX_VERTEX_CAP}"));
    }
    if n > cap {
        return limit(format!("enumeration is capped at {cap} vertices, got {n}"));
    }
    let mut out = Vec::new();
    for j in 2..=n {
        let mut level: Vec<(usize, CanonicalForm)> =
            graphs_on_exactly(j).iter().map(|f| (f.edge_count(), f.clone())).collect();
        level.sort();
        let graphs: Vec<Graph> =
            level.par_iter().map(|(_, f)| f.to_graph()).filter(|g| !g.has_isolated_vertices() && filter(g)).collect();
        out.extend(graphs);
    }
    Ok(out)
}

/// Canonical forms of all graphs on exactly `j` vertices, isolated vertices allowed.
pub fn graphs_on_exactly(j: usize) -> Arc<Vec<CanonicalForm>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<CanonicalForm>>>>> = OnceLock::new();
    let levels = LEVELS.get_or_init(|| Mutex::new(Vec::new()));
    let mut levels = levels.lock().expect("enumeration cache poisoned");
    while levels.len() <= j {
        let next = match levels.last() {
            None => vec![canonical_form(&Graph::empty())],
            Some(prev) => extend_by_vertex(prev, levels.len()),
        };
        levels.push(Arc::new(next));
    }
    levels[j].clone()
}

fn extend_by_vertex(prev: &[CanonicalForm], j: usize) -> Vec<CanonicalForm> {
    let new = (j - 1) as Vertex;
    let found: BTreeSet<CanonicalForm> = prev
        .par_iter()
        .flat_map_iter(|f| {
            let base = f.to_graph().with_vertex(new);
            (0u32..1 << (j - 1)).map(move |mask| {
                let mut g = base.clone();
                for u in 0..new {
                    if mask >> u & 1 == 1 {
                        g = g.with_edge(Edge::new(u, new));
                    }
                }
                canonical_form(&g)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_iter().collect()
}

/// Every graph without isolated vertices having between 1 and `max_edges`
/// edges and at most `max_vertices` vertices, once per isomorphism class,
/// ordered by (edge count, vertex count, canonical code).
pub fn enumerate_graphs_by_edges(max_edges: usize, max_vertices: usize) -> Result<Vec<Graph>> {
    if max_edges > MAX_EDGE_CAP {
        return limit(format!("edge enumeration is capped at {MAX_EDGE_CAP} edges, got {max_edges}"));
    }
    if max_vertices > 64 {
        return invalid("at most 64 vertices are supported");
    }
    let mut out: Vec<Graph> = Vec::new();
    let mut layer: BTreeSet<CanonicalForm> = BTreeSet::new();
    if max_edges >= 1 && max_vertices >= 2 {
        layer.insert(canonical_form(&Graph::from_edge_set([Edge::new(0, 1)])));
    }
    for m in 1..=max_edges {
        let mut graphs: Vec<(usize, CanonicalForm)> = layer.iter().map(|f| (f.n, f.clone())).collect();
        graphs.sort();
        out.extend(graphs.iter().map(|(_, f)| f.to_graph()));
        if m == max_edges {
            break;
        }
        let next: BTreeSet<CanonicalForm> = layer
            .par_iter()
            .flat_map_iter(|f| add_one_edge(&f.to_graph(), max_vertices).into_iter())
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        layer = next;
    }
    Ok(out)
}

fn add_one_edge(g: &Graph, max_vertices: usize) -> Vec<CanonicalForm> {
    let n = g.vertex_count() as Vertex;
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let e = Edge::new(a, b);
            if !g.has_edge(e) {
                out.push(canonical_form(&g.with_edge(e)));
            }
        }
    }
    if (n as usize) < max_vertices {
        for a in 0..n {
            out.push(canonical_form(&g.with_edge(Edge::new(a, n))));
        }
    }
    if (n as usize) + 2 <= max_vertices {
        out.push(canonical_form(&g.with_edge(Edge::new(n, n + 1))));
    }
    out
}
