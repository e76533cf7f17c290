mod common;

use common::{max_matching, oracle};
use graph_matroids::families::{shipped_families, shipped_unbounded, DimThreshold, FamilySpec};
use graph_matroids::graph::canon::are_isomorphic;
use graph_matroids::graph::{complete_graph, enumerate_graphs_by_edges, star_graph, Edge, Graph};
use graph_matroids::matroid::{is_circuit, Oracle};
use graph_matroids::reconstruction::min_degree_one_subgraph;
use graph_matroids::structure::{
    bounded_rank, classify_abstract_rigidity, compute_profile, find_removable_vertex, removable_vertex_degree_bound,
    small_circuit_min_degree_one,
};
use rayon::prelude::*;

#[test]
fn rank_is_linear_from_the_threshold() {
    for (spec, DimThreshold { d, t }) in shipped_unbounded() {
        let o = Oracle::from_spec(&spec).unwrap();
        let base = o.rank_complete(t).unwrap();
        for n in t..=8 {
            assert_eq!(o.rank_complete(n).unwrap(), d * (n - t) + base, "{spec} at n = {n}");
        }
        // One vertex earlier the increment is different, so t is sharp.
        if t > d + 1 {
            assert_ne!(base - o.rank_complete(t - 1).unwrap(), d, "{spec}");
        }
    }
}

#[test]
fn computed_profiles_match_documented_ones() {
    shipped_unbounded().par_iter().for_each(|(spec, p)| {
        let o = Oracle::from_spec(spec).unwrap();
        let profile = compute_profile(&o, 6).unwrap();
        assert_eq!(profile.exact_unbounded(), Some(*p), "{spec}");
        let w = profile.witness().unwrap();
        assert!(is_circuit(&o, w.edges()).unwrap());
        assert_eq!(w.min_degree(), Some(p.d + 1));
        assert_eq!(w.vertex_count(), p.t + 1);
    });
}

#[test]
fn abstract_rigidity_classification() {
    for (spec, expected) in [
        ("rigidity:d=1", true),
        ("rigidity:d=2", true),
        ("rigidity:d=3", true),
        ("count:k=2,l=3", true),
        ("graphic", true),
        ("bicircular", false),
        ("count:k=2,l=2", false),
    ] {
        let o = oracle(spec);
        let profile = compute_profile(&o, 6).unwrap();
        assert_eq!(classify_abstract_rigidity(&profile, &o).unwrap(), expected, "{spec}");
    }
}

/// A graph with a matching of size `r(M)` has full rank in a bounded family.
#[test]
fn large_matchings_force_full_rank_in_bounded_families() {
    let graphs = enumerate_graphs_by_edges(8, 16).unwrap();
    for spec in shipped_families().into_iter().filter(|s| s.is_bounded() == Some(true)) {
        let o = Oracle::from_spec(&spec).unwrap();
        let r = bounded_rank(&o).unwrap();
        let mut checked = 0;
        for g in &graphs {
            if max_matching(g.edges()) >= r {
                assert_eq!(o.rank_edges(g.edges()).unwrap(), r, "{spec} on {g}");
                checked += 1;
            }
        }
        assert!(checked >= 5, "{spec}: {checked}");
    }
}

/// The only circuit with at most `r(M)` edges and a degree-one vertex is the
/// returned star.
#[test]
fn small_circuits_are_unique_stars() {
    for spec in ["stars:m=3", "stars:m=4", "uniform:k=3", "trunc(graphic,k=5)"] {
        let o = oracle(spec);
        let r = bounded_rank(&o).unwrap();
        let found = small_circuit_min_degree_one(&o).unwrap();
        let brute: Vec<Graph> = enumerate_graphs_by_edges(r, 2 * r)
            .unwrap()
            .into_iter()
            .filter(|g| g.min_degree() == Some(1) && is_circuit(&o, g.edges()).unwrap())
            .collect();
        match found {
            Some(c) => {
                assert_eq!(brute.len(), 1, "{spec}: {brute:?}");
                assert!(are_isomorphic(&brute[0], &star_graph(c.m).unwrap()));
                assert!(are_isomorphic(&c.witness, &brute[0]));
            }
            None => assert!(brute.is_empty(), "{spec}: {brute:?}"),
        }
    }
}

#[test]
fn min_degree_one_subgraphs_exist_in_large_graphs() {
    for g in enumerate_graphs_by_edges(8, 16).unwrap() {
        for m in 1..=(g.edge_count() + 1) / 2 {
            let h = min_degree_one_subgraph(&g, m).unwrap_or_else(|| panic!("{g} with m = {m}"));
            assert_eq!(h.edge_count(), m);
            assert_eq!(h.min_degree(), Some(1));
            assert!(h.edges().iter().all(|e| g.has_edge(*e)));
        }
    }
}

/// Minimum degree at the bound guarantees a vertex whose deletion costs at
/// most `d` in rank.
#[test]
fn removable_vertex_at_the_degree_bound() {
    let families = ["graphic", "bicircular", "even-cycle", "count:k=2,l=3", "count:k=2,l=0", "rigidity:d=2"];
    families.par_iter().for_each(|spec| {
        let o = oracle(spec);
        let (d, t) = match spec.parse::<FamilySpec>().unwrap().documented_profile().unwrap() {
            graph_matroids::families::KnownProfile::Unbounded { d, t } => (d, t),
            other => panic!("{other:?}"),
        };
        let bound = removable_vertex_degree_bound(&o, DimThreshold { d, t }).unwrap();
        let dense = complete_graph(bound + 1).unwrap();
        let n = bound + 2 + bound % 2;
        let k = complete_graph(n).unwrap();
        let matching: Vec<Edge> = (0..n as u32 / 2).map(|i| Edge::new(2 * i, 2 * i + 1)).collect();
        let sparse = Graph::from_edge_set(k.edges().iter().copied().filter(|e| !matching.contains(e)));
        for g in [dense, sparse] {
            assert!(g.min_degree().unwrap() >= bound);
            let v = find_removable_vertex(&o, &g, d).unwrap().unwrap_or_else(|| panic!("{spec}"));
            let total = o.rank_edges(g.edges()).unwrap();
            assert!(total <= o.rank_edges(g.without_vertex(v).edges()).unwrap() + d);
        }
    });
    assert_eq!(removable_vertex_degree_bound(&oracle("graphic"), DimThreshold { d: 1, t: 2 }).unwrap(), 12);
}
