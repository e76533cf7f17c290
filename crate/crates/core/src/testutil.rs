//! Brute-force helpers shared by unit tests. Deliberately naive so they can
//! serve as independent oracles for the optimized code paths.

use crate::graph::{Edge, Graph, Vertex};

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Tries every vertex bijection.
pub(crate) fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let gv = g.vertices().to_vec();
    let hv = h.vertices().to_vec();
    let mut perm: Vec<usize> = (0..hv.len()).collect();
    loop {
        let ok = g.edges().iter().all(|e| {
            let a = hv[perm[gv.iter().position(|&x| x == e.u()).unwrap()]];
            let b = hv[perm[gv.iter().position(|&x| x == e.v()).unwrap()]];
            h.has_edge(Edge::new(a, b))
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// All edge subsets of `K_n` on vertex set `0..n`, isolated vertices allowed.
pub(crate) fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(Vertex, Vertex)> =
        (0..n as Vertex).flat_map(|a| (a + 1..n as Vertex).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p);
            Graph::new(0..n as Vertex, edges).unwrap()
        })
        .collect()
}
