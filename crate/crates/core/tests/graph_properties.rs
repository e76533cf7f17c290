mod common;

use std::collections::BTreeSet;

use common::{arb_graph, brute_isomorphic, brute_vertex_connectivity, permutations};
use graph_matroids::graph::canon::{are_isomorphic, canonical_form, find_isomorphism};
use graph_matroids::graph::connectivity::vertex_connectivity;
use graph_matroids::graph::io::{parse_edge_list, to_edge_list};
use graph_matroids::graph::{
    complete_bipartite, complete_graph, cone, cycle_graph, edge_split, enumerate_graphs, Edge, Graph, Vertex,
};
use proptest::prelude::*;

/// Graphs without isolated vertices on at most four vertices are the nonempty
/// edge sets of `K_4` up to relabeling; classes are minimum masks over `S_4`.
#[test]
fn enumeration_count_matches_brute_force() {
    let k4 = complete_graph(4).unwrap();
    let edges = k4.edges();
    let perms = permutations(4);
    let mut classes = BTreeSet::new();
    for mask in 1u32..1 << edges.len() {
        let chosen: Vec<Edge> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let best = perms
            .iter()
            .map(|p| {
                chosen.iter().fold(0u32, |acc, e| {
                    let f = Edge::new(p[e.u() as usize] as Vertex, p[e.v() as usize] as Vertex);
                    acc | 1 << edges.iter().position(|&x| x == f).unwrap()
                })
            })
            .min()
            .unwrap();
        classes.insert(best);
    }
    let enumerated = enumerate_graphs(4, |_| true).unwrap();
    assert_eq!(enumerated.len(), 10);
    assert_eq!(classes.len(), 10);
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    let graphs = enumerate_graphs(5, |_| true).unwrap();
    for (i, g) in graphs.iter().enumerate() {
        assert!(!g.has_isolated_vertices());
        for h in &graphs[i + 1..] {
            assert_eq!(find_isomorphism(g, h).unwrap(), None, "{g} and {h}");
            if g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count() && g.vertex_count() <= 4 {
                assert!(!brute_isomorphic(g, h));
            }
        }
    }
}

#[test]
fn vertex_connectivity_matches_exhaustive_cuts() {
    for g in enumerate_graphs(6, |_| true).unwrap() {
        assert_eq!(vertex_connectivity(&g).unwrap(), brute_vertex_connectivity(&g), "{g}");
    }
}

#[test]
fn coning_raises_connectivity_by_one() {
    for g in enumerate_graphs(6, |g| g.is_connected()).unwrap() {
        let kappa = vertex_connectivity(&g).unwrap();
        if kappa < g.vertex_count() - 1 {
            assert_eq!(vertex_connectivity(&cone(&g)).unwrap(), kappa + 1, "{g}");
        }
    }
}

#[test]
fn edge_split_degrees() {
    for g in enumerate_graphs(5, |_| true).unwrap() {
        for d in 1..=3 {
            for &uv in g.edges() {
                let others: Vec<Vertex> = g.vertices().iter().copied().filter(|&x| !uv.is_incident(x)).collect();
                if others.len() < d - 1 {
                    continue;
                }
                let extra = &others[..d - 1];
                let s = edge_split(&g, uv, extra, d).unwrap();
                let w = g.fresh_label();
                assert_eq!(s.degree(w), d + 1);
                assert_eq!(s.edge_count(), g.edge_count() + d);
                for &x in g.vertices() {
                    let expected =
                        if uv.is_incident(x) { g.degree(x) } else { g.degree(x) + extra.contains(&x) as usize };
                    assert_eq!(s.degree(x), expected);
                }
            }
        }
    }
}

/// Vertex-transitive graphs exercise the automorphism pruning.
fn symmetric_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in [6u32, 8, 10, 12] {
        let k = complete_graph(n as usize).unwrap();
        out.push(Graph::from_edge_set(k.edges().iter().copied().filter(|e| !(e.u() % 2 == 0 && e.v() == e.u() + 1))));
        out.push(cycle_graph(n as usize).unwrap());
    }
    let outer = (0..5).map(|i| Edge::new(i, (i + 1) % 5));
    let spokes = (0..5).map(|i| Edge::new(i, i + 5));
    let inner = (0..5).map(|i| Edge::new(5 + i, 5 + (i + 2) % 5));
    out.push(Graph::from_edge_set(outer.chain(spokes).chain(inner)));
    out.push(complete_bipartite(4, 4).unwrap());
    out
}

proptest! {
    #[test]
    fn symmetric_canonical_forms_ignore_labels((g, perm) in (0..symmetric_graphs().len()).prop_flat_map(|i| {
        let g = symmetric_graphs().swap_remove(i);
        let labels: Vec<Vertex> = (0..g.vertex_count() as Vertex).collect();
        (Just(g), Just(labels).prop_shuffle())
    })) {
        let h = g.relabel(|v| perm[v as usize]).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &canonical_form(&g).to_graph()));
    }

    #[test]
    fn canonical_form_ignores_labels((g, targets) in arb_graph(7, 12).prop_flat_map(|g| {
        let labels: Vec<Vertex> = (0..g.vertex_count() as Vertex).map(|i| i * 3 + 1).collect();
        (Just(g), Just(labels).prop_shuffle())
    })) {
        let vs = g.vertices().to_vec();
        let h = g.relabel(|v| targets[vs.iter().position(|&x| x == v).unwrap()]).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(find_isomorphism(&g, &h).unwrap().is_some());
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(9, 15)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
