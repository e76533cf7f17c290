//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use graph_matroids::families::FamilySpec;
use graph_matroids::graph::{Edge, Graph, Vertex};
use graph_matroids::matroid::Oracle;
use proptest::prelude::*;

pub fn oracle(spec: &str) -> Oracle {
    Oracle::from_spec(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

pub fn graph(edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edges(edges.iter().copied()).unwrap()
}

/// Edges of `g` selected by the bits of `mask`.
pub fn subset(edges: &[Edge], mask: u64) -> Vec<Edge> {
    (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect()
}

/// Size of a largest independent subset, by trying all subsets from the top.
pub fn brute_rank(o: &Oracle, edges: &[Edge]) -> usize {
    let m = edges.len();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); m + 1];
    for mask in 0..1u64 << m {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in (0..=m).rev() {
        if by_size[size].iter().any(|&mask| o.is_independent_edges(&subset(edges, mask)).unwrap()) {
            return size;
        }
    }
    0
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether some vertex bijection maps `g` onto `h`, by trying them all.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (gv, hv) = (g.vertices(), h.vertices());
    permutations(gv.len()).into_iter().any(|p| {
        g.edges().iter().all(|e| {
            let a = hv[p[gv.iter().position(|&x| x == e.u()).unwrap()]];
            let b = hv[p[gv.iter().position(|&x| x == e.v()).unwrap()]];
            h.has_edge(Edge::new(a, b))
        })
    })
}

/// Smallest vertex set whose removal disconnects `g` or leaves one vertex,
/// by trying all subsets.
pub fn brute_vertex_connectivity(g: &Graph) -> usize {
    let vs = g.vertices();
    let n = vs.len();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..1 << n {
        let removed: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        if removed.len() >= best {
            continue;
        }
        let rest = g.without_vertices(&removed);
        if rest.vertex_count() >= 2 && !rest.is_connected() {
            best = removed.len();
        }
    }
    best
}

/// Size of a largest matching, by exhaustive recursion.
pub fn max_matching(edges: &[Edge]) -> usize {
    fn go(edges: &[Edge], used: &mut BTreeSet<Vertex>) -> usize {
        let Some((&e, rest)) = edges.split_first() else {
            return 0;
        };
        let skip = go(rest, used);
        if used.contains(&e.u()) || used.contains(&e.v()) {
            return skip;
        }
        used.insert(e.u());
        used.insert(e.v());
        let take = 1 + go(rest, used);
        used.remove(&e.u());
        used.remove(&e.v());
        skip.max(take)
    }
    go(edges, &mut BTreeSet::new())
}

/// Random simple graphs on labels `0..n` with up to `max_edges` edges and no
/// isolated vertices.
pub fn arb_graph(n: Vertex, max_edges: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec((0..n, 0..n), 1..=max_edges).prop_filter_map("needs an edge", |pairs| {
        let edges: Vec<Edge> = pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| Edge::new(a, b)).collect();
        (!edges.is_empty()).then(|| Graph::from_edge_set(edges))
    })
}
