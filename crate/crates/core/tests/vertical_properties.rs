mod common;

use common::{arb_graph, brute_vertex_connectivity, oracle, subset};
use graph_matroids::families::shipped_unbounded;
use graph_matroids::graph::{enumerate_graphs, Graph};
use graph_matroids::matroid::Oracle;
use graph_matroids::vertical::{
    check_min_degree_bound, find_vertical_separation, is_vertically_k_connected,
    redundant_rigidity_to_vertical_harness, relaxed_separation_to_strict, vertical_connectivity,
    vertical_to_vertex_connectivity_harness, VerticalSeparation,
};
use proptest::prelude::*;
use rayon::prelude::*;

/// Smallest `k` admitting a vertical `k`-separation, straight from the
/// inequalities over every bipartition; the rank when there is none.
fn brute_vertical(o: &Oracle, g: &Graph) -> usize {
    let edges = g.edges();
    let r = o.rank_edges(edges).unwrap();
    let full = (1u64 << edges.len()) - 1;
    let mut best = r;
    for mask in 1..full {
        let r1 = o.rank_edges(&subset(edges, mask)).unwrap();
        let r2 = o.rank_edges(&subset(edges, full & !mask)).unwrap();
        for k in 1..best {
            if r1 >= k && r2 >= k && r1 + r2 < r + k {
                best = k;
                break;
            }
        }
    }
    best
}

/// Whether some bipartition satisfies the inequalities for exactly `k`.
fn brute_has_separation(o: &Oracle, g: &Graph, k: usize) -> bool {
    let edges = g.edges();
    let r = o.rank_edges(edges).unwrap();
    let full = (1u64 << edges.len()) - 1;
    (1..full).any(|mask| {
        let r1 = o.rank_edges(&subset(edges, mask)).unwrap();
        let r2 = o.rank_edges(&subset(edges, full & !mask)).unwrap();
        r1 >= k && r2 >= k && r1 + r2 < r + k
    })
}

#[test]
fn graphic_vertical_connectivity_is_vertex_connectivity() {
    let graphic = oracle("graphic");
    let graphs = enumerate_graphs(6, |g| g.is_connected() && g.edge_count() >= 2).unwrap();
    assert!(graphs.len() > 100);
    graphs.par_iter().for_each(|g| {
        assert_eq!(vertical_connectivity(&graphic, g).unwrap().value, brute_vertex_connectivity(g), "{g}");
    });
}

#[test]
fn vertical_connectivity_matches_the_definition() {
    let graphs = enumerate_graphs(5, |_| true).unwrap();
    for spec in ["graphic", "bicircular", "count:k=2,l=3", "rigidity:d=2", "uniform:k=3"] {
        let o = oracle(spec);
        graphs.par_iter().filter(|g| o.rank_edges(g.edges()).unwrap() > 0).for_each(|g| {
            let vc = vertical_connectivity(&o, g).unwrap();
            assert_eq!(vc.value, brute_vertical(&o, g), "{spec} on {g}");
            if let Some(s) = &vc.smallest_separation {
                assert_eq!(s.k, vc.value);
                assert!(s.certify(&o, g).unwrap());
            }
            for k in 1..=vc.rank {
                assert_eq!(is_vertically_k_connected(&o, g, k).unwrap(), k <= vc.value, "{spec} on {g}, k = {k}");
            }
        });
    }
}

#[test]
fn minimum_degree_bound_holds_on_small_graphs() {
    let graphs = enumerate_graphs(6, |_| true).unwrap();
    for spec in ["graphic", "count:k=2,l=3", "bicircular"] {
        let o = oracle(spec);
        graphs.par_iter().for_each(|g| {
            for k in 2..=3 {
                assert!(check_min_degree_bound(&o, g, k).unwrap(), "{spec} on {g}, k = {k}");
            }
        });
    }
}

#[test]
fn vertically_connected_matroids_force_vertex_connectivity() {
    shipped_unbounded().par_iter().for_each(|(spec, _)| {
        let o = Oracle::from_spec(spec).unwrap();
        let report = vertical_to_vertex_connectivity_harness(&o, 6).unwrap();
        assert!(report.hosts_checked > 100);
        assert_eq!(report.counterexample, None, "{spec}");
    });
}

#[test]
fn redundant_rigidity_forces_vertical_connectivity() {
    for spec in ["graphic", "count:k=2,l=3"] {
        let o = oracle(spec);
        for k in 1..=2 {
            let report = redundant_rigidity_to_vertical_harness(&o, k, 6).unwrap();
            assert!(report.premises_met > 0, "{spec}, k = {k}");
            assert_eq!(report.counterexample, None, "{spec}, k = {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn found_separations_certify(g in arb_graph(7, 10), k in 1usize..4) {
        let o = oracle("count:k=2,l=3");
        match find_vertical_separation(&o, &g, k).unwrap() {
            Some(s) => {
                prop_assert_eq!(s.k, k);
                prop_assert!(s.certify(&o, &g).unwrap());
                let forged = VerticalSeparation { r: s.r + 1, ..s.clone() };
                prop_assert!(!forged.certify(&o, &g).unwrap());
            }
            None => prop_assert!(!brute_has_separation(&o, &g, k)),
        }
    }

    #[test]
    fn relaxed_covers_become_separations(g in arb_graph(6, 9), a in any::<u64>(), b in any::<u64>()) {
        let o = oracle("graphic");
        let edges = g.edges();
        let full = (1u64 << edges.len()) - 1;
        let (m1, m2) = (a & full, (b & full) | (full & !a));
        let (e1, e2) = (subset(edges, m1), subset(edges, m2));
        prop_assume!(!e1.is_empty() && m2 & !m1 != 0);
        let (r1, r2, r) = (o.rank_edges(&e1).unwrap(), o.rank_edges(&e2).unwrap(), o.rank_edges(edges).unwrap());
        let lo = (r1 + r2 + 1).saturating_sub(r).max(1);
        prop_assume!(lo <= r1.min(r2));
        let s = relaxed_separation_to_strict(&o, &g, &e1, &e2, lo).unwrap();
        prop_assert!(s.certify(&o, &g).unwrap());
        prop_assert!(s.k <= lo);
    }
}
