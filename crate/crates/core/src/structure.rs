//! Structural invariants of a family computed from its oracle: circuits found
//! by enumeration give dimensionality and threshold, matchings and stars
//! decide boundedness, and edge splits probe 1-extendability.
//!
//! Dimensionality and threshold quantify over all finite graphs, so values
//! computed within a vertex horizon are observations. They are flagged exact
//! when they match the family's documented profile, or when the observed
//! dimensionality is zero (no circuit can have minimum degree below one, and
//! every graph smaller than the witness was examined).

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{invalid, limit, precondition, Result};
use crate::families::{DimThreshold, KnownProfile};
use crate::graph::{
    complete_graph, edge_split, enumerate_graphs, enumerate_graphs_by_edges, matching_graph, star_graph, Edge, Graph,
    Vertex,
};
use crate::matroid::circuits::next_combination;
use crate::matroid::{is_circuit, is_rigid, is_rigid_lenient, Oracle};

/// Largest vertex horizon accepted by [`compute_profile`].
pub const PROFILE_VERTEX_CAP: usize = 8;
/// Largest matching tried by [`bounded_rank`].
pub const BOUNDED_RANK_HORIZON: usize = 64;

/// An observed value, or a lower bound when no certificate was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Observed(usize),
    AtLeast(usize),
}

impl Measure {
    pub fn value(self) -> Option<usize> {
        match self {
            Measure::Observed(v) => Some(v),
            Measure::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Observed(v) => write!(f, "{v}"),
            Measure::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

impl Serialize for Measure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct AtLeast {
            at_least: usize,
        }
        match *self {
            Measure::Observed(v) => s.serialize_u64(v as u64),
            Measure::AtLeast(v) => AtLeast { at_least: v }.serialize(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyProfile {
    pub horizon: usize,
    pub nontrivial: bool,
    pub bounded: bool,
    pub dimensionality: Measure,
    pub dimensionality_exact: bool,
    pub threshold: Measure,
    pub threshold_exact: bool,
    /// `r(K_1), .., r(K_n)` for the horizon `n`.
    pub rank_sequence: Vec<usize>,
    pub bounded_rank: Option<usize>,
    pub witness_edge_list: Option<Vec<Edge>>,
}

impl FamilyProfile {
    /// `(d, t)` when both are exact and the family is unbounded.
    pub fn exact_unbounded(&self) -> Option<DimThreshold> {
        match (self.dimensionality, self.threshold) {
            (Measure::Observed(d), Measure::Observed(t))
                if self.dimensionality_exact && self.threshold_exact && !self.bounded =>
            {
                Some(DimThreshold { d, t })
            }
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<Graph> {
        self.witness_edge_list.as_ref().map(|e| Graph::from_edge_set(e.iter().copied()))
    }
}

/// Dependent, and every single-edge deletion independent.
fn is_circuit_graph(oracle: &Oracle, g: &Graph) -> Result<bool> {
    let inner = oracle.independence();
    if inner.is_independent(g.edges())? {
        return Ok(false);
    }
    for i in 0..g.edge_count() {
        let mut rest = g.edges().to_vec();
        rest.remove(i);
        if !inner.is_independent(&rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Profile of the family from every graph on at most `n_max` vertices.
pub fn compute_profile(oracle: &Oracle, n_max: usize) -> Result<FamilyProfile> {
    if n_max > PROFILE_VERTEX_CAP {
        return limit(format!("profiles are computed up to {PROFILE_VERTEX_CAP} vertices, got {n_max}"));
    }
    let graphs = enumerate_graphs(n_max, |_| true)?;
    let found: Vec<Option<(usize, usize)>> = graphs
        .par_iter()
        .map(|g| -> Result<Option<(usize, usize)>> {
            Ok(is_circuit_graph(oracle, g)?.then(|| (g.min_degree().unwrap_or(0), g.vertex_count())))
        })
        .collect::<Result<_>>()?;
    let mut rank_sequence = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        rank_sequence.push(oracle.rank_complete(n)?);
    }

    let min_degree = found.iter().flatten().map(|c| c.0).min();
    let Some(delta) = min_degree else {
        return Ok(FamilyProfile {
            horizon: n_max,
            nontrivial: false,
            bounded: false,
            dimensionality: Measure::AtLeast(0),
            dimensionality_exact: false,
            threshold: Measure::AtLeast(n_max),
            threshold_exact: false,
            rank_sequence,
            bounded_rank: None,
            witness_edge_list: None,
        });
    };
    // Enumeration order is (vertices, edges, code), so the first minimal
    // circuit is also the canonical tie-break.
    let (index, (_, vertices)) = found
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.filter(|c| c.0 == delta).map(|c| (i, c)))
        .min_by_key(|&(i, c)| (c.1, i))
        .expect("a circuit of minimum degree delta exists");
    let (d, t) = (delta - 1, vertices - 1);
    let documented = oracle.spec().and_then(|s| s.documented_profile());
    let (d_exact, t_exact) = match documented {
        _ if d == 0 => (true, true),
        Some(KnownProfile::Unbounded { d: dd, t: dt }) => (d == dd, d == dd && t == dt),
        _ => (false, false),
    };
    let bounded = d == 0;
    Ok(FamilyProfile {
        horizon: n_max,
        nontrivial: true,
        bounded,
        dimensionality: Measure::Observed(d),
        dimensionality_exact: d_exact,
        threshold: Measure::Observed(t),
        threshold_exact: t_exact,
        rank_sequence,
        bounded_rank: if bounded { Some(bounded_rank(oracle)?) } else { None },
        witness_edge_list: Some(graphs[index].edges().to_vec()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Boundedness {
    /// A dependent forest, which only bounded families have.
    Bounded { witness: Graph },
    /// Every matching and star with at most `horizon` edges is independent.
    UnboundedUpTo { horizon: usize },
}

/// Tests matchings and stars with up to `m_max` edges. A dependent forest
/// proves boundedness; otherwise the answer holds only up to the horizon.
pub fn probe_boundedness(oracle: &Oracle, m_max: usize) -> Result<Boundedness> {
    for m in 1..=m_max {
        for g in [matching_graph(m)?, star_graph(m)?] {
            if !oracle.is_independent(&g)? {
                return Ok(Boundedness::Bounded { witness: g });
            }
        }
    }
    Ok(Boundedness::UnboundedUpTo { horizon: m_max })
}

/// `r(M)` of a bounded family: one less than the size of the smallest
/// dependent matching.
pub fn bounded_rank(oracle: &Oracle) -> Result<usize> {
    for m in 1..=BOUNDED_RANK_HORIZON {
        if !oracle.is_independent(&matching_graph(m)?)? {
            return Ok(m - 1);
        }
    }
    precondition(format!(
        "every matching with up to {BOUNDED_RANK_HORIZON} edges is independent in {}; the family looks unbounded",
        oracle.name()
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallCircuit {
    pub m: usize,
    pub witness: Graph,
}

/// The smallest circuit with at most `r(M)` edges and a vertex of degree
/// one, searched by increasing edge count. Such a circuit must be the star
/// `K_{1,m}`; anything else means the oracle is not a graph matroid family.
pub fn small_circuit_min_degree_one(oracle: &Oracle) -> Result<Option<SmallCircuit>> {
    let r = bounded_rank(oracle)?;
    if r == 0 {
        return Ok(None);
    }
    let graphs = enumerate_graphs_by_edges(r, 2 * r)?;
    let hit = graphs
        .par_iter()
        .map(|g| -> Result<bool> { Ok(g.min_degree() == Some(1) && is_circuit_graph(oracle, g)?) })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .position(|b| b);
    let Some(i) = hit else {
        return Ok(None);
    };
    let witness = graphs[i].clone();
    let m = witness.edge_count();
    let star = crate::graph::canon::canonical_graph(&star_graph(m)?);
    if witness != star {
        return precondition(format!(
            "{} has a small circuit {witness} with a degree-one vertex that is not a star; it violates the family axioms",
            oracle.name()
        ));
    }
    Ok(Some(SmallCircuit { m, witness }))
}

/// Rigid, and still rigid after deleting any set of at most `k` vertices.
/// Vertices left isolated by a deletion are dropped first.
pub fn is_k_redundantly_rigid(oracle: &Oracle, g: &Graph, k: usize) -> Result<bool> {
    redundantly_rigid(oracle, g, k, false)
}

/// As [`is_k_redundantly_rigid`], but a deletion must leave a graph whose rank
/// is that of the complete graph on all remaining vertices, isolated ones
/// included. This is the reading under which vertex-redundant rigidity
/// forces vertical connectivity; with isolated vertices dropped, a path on
/// three vertices would count as 1-redundantly rigid.
pub fn is_k_redundantly_rigid_strict(oracle: &Oracle, g: &Graph, k: usize) -> Result<bool> {
    redundantly_rigid(oracle, g, k, true)
}

fn redundantly_rigid(oracle: &Oracle, g: &Graph, k: usize, strict: bool) -> Result<bool> {
    let n = g.vertex_count();
    if n < k + 2 {
        return invalid(format!("k-redundant rigidity needs at least k+2 = {} vertices, got {n}", k + 2));
    }
    if !is_rigid(oracle, g)? {
        return Ok(false);
    }
    for size in 1..=k {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let removed: Vec<Vertex> = idx.iter().map(|&i| g.vertices()[i]).collect();
            let rest = g.without_vertices(&removed);
            let rigid = if strict {
                oracle.rank_edges(rest.edges())? == oracle.rank_complete(n - size)?
            } else {
                is_rigid_lenient(oracle, &rest)?
            };
            if !rigid {
                return Ok(false);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(true)
}

/// Whether the family is an abstract rigidity matroid, i.e. `t = d + 1`.
/// The answer is cross-checked against whether `K_{d+2}` is a circuit.
pub fn classify_abstract_rigidity(profile: &FamilyProfile, oracle: &Oracle) -> Result<bool> {
    let Some(DimThreshold { d, t }) = profile.exact_unbounded() else {
        return precondition("classification needs an exact profile of a nontrivial unbounded family");
    };
    let by_threshold = t == d + 1;
    let by_circuit = is_circuit(oracle, complete_graph(d + 2)?.edges())?;
    if by_threshold != by_circuit {
        return precondition(format!(
            "inconsistent profile for {}: t = {t}, d = {d}, but K_{} is {}a circuit",
            oracle.name(),
            d + 2,
            if by_circuit { "" } else { "not " }
        ));
    }
    Ok(by_threshold)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitViolation {
    pub graph: Graph,
    pub edge: Edge,
    pub extra: Vec<Vertex>,
    pub split: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendabilityReport {
    pub d: usize,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    /// Independent enumerated graphs examined, up to and including the
    /// counterexample if there is one.
    pub graphs_checked: usize,
    pub counterexample: Option<SplitViolation>,
}

/// First `d`-dimensional edge split of `g` that is dependent.
fn dependent_split(oracle: &Oracle, g: &Graph, d: usize) -> Result<Option<SplitViolation>> {
    for &uv in g.edges() {
        let others: Vec<Vertex> = g.vertices().iter().copied().filter(|&x| !uv.is_incident(x)).collect();
        if others.len() < d - 1 {
            continue;
        }
        let mut idx: Vec<usize> = (0..d - 1).collect();
        loop {
            let extra: Vec<Vertex> = idx.iter().map(|&i| others[i]).collect();
            let split = edge_split(g, uv, &extra, d)?;
            if !oracle.is_independent(&split)? {
                return Ok(Some(SplitViolation { graph: g.clone(), edge: uv, extra, split }));
            }
            if d == 1 || !next_combination(&mut idx, others.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Applies every `d`-dimensional edge split to every independent graph on at
/// most `n_max` vertices, then to `samples` random spanning independent
/// graphs on `n_max + 1` or `n_max + 2` vertices, one random split each.
pub fn probe_one_extendability(
    oracle: &Oracle,
    d: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
) -> Result<ExtendabilityReport> {
    if d == 0 {
        return invalid("edge splits need a positive dimension");
    }
    if let Some(nominal) = oracle.spec().and_then(|s| s.nominal_dimensionality()) {
        if nominal != d {
            return invalid(format!("{} has dimensionality {nominal}, not {d}", oracle.name()));
        }
    }
    let graphs = enumerate_graphs(n_max, |_| true)?;
    let independent: Vec<bool> = graphs.par_iter().map(|g| oracle.is_independent(g)).collect::<Result<_>>()?;
    let candidates: Vec<&Graph> = graphs.iter().zip(&independent).filter(|p| *p.1).map(|p| p.0).collect();
    let first = candidates
        .par_iter()
        .enumerate()
        .map(|(i, g)| dependent_split(oracle, g, d).map(|v| v.map(|v| (i, v))))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    let mut report =
        ExtendabilityReport { d, n_max, samples, seed, graphs_checked: candidates.len(), counterexample: None };
    if let Some((i, v)) = first {
        report.graphs_checked = i + 1;
        report.counterexample = Some(v);
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let n = n_max + 1 + s % 2;
        let mut edges = complete_graph(n)?.edges().to_vec();
        edges.shuffle(&mut rng);
        let basis = oracle.independence().basis(&edges)?;
        let g = Graph::from_edge_set(basis);
        if g.edge_count() == 0 {
            continue;
        }
        let uv = g.edges()[rng.gen_range(0..g.edge_count())];
        let mut others: Vec<Vertex> = g.vertices().iter().copied().filter(|&x| !uv.is_incident(x)).collect();
        if others.len() < d - 1 {
            continue;
        }
        others.shuffle(&mut rng);
        let mut extra = others[..d - 1].to_vec();
        extra.sort_unstable();
        let split = edge_split(&g, uv, &extra, d)?;
        if !oracle.is_independent(&split)? {
            report.counterexample = Some(SplitViolation { graph: g, edge: uv, extra, split });
            break;
        }
    }
    Ok(report)
}

/// A vertex `v` with `r(G) <= r(G - v) + d`, by direct search in label order.
pub fn find_removable_vertex(oracle: &Oracle, g: &Graph, d: usize) -> Result<Option<Vertex>> {
    let total = oracle.rank_edges(g.edges())?;
    for &v in g.vertices() {
        if total <= oracle.rank_edges(g.without_vertex(v).edges())? + d {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// `6 max(6 r_0, t)` with `r_0 = r(K_t) - d t`, the minimum degree above which
/// a removable vertex is guaranteed.
pub fn removable_vertex_degree_bound(oracle: &Oracle, profile: DimThreshold) -> Result<usize> {
    let r0 = oracle.rank_complete(profile.t)? as i64 - (profile.d * profile.t) as i64;
    Ok(6 * (6 * r0).max(profile.t as i64) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::graph::cycle_graph;

    fn oracle(spec: &str) -> Oracle {
        Oracle::from_spec(&spec.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn g(edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn documented_profiles() {
        let graphic = compute_profile(&oracle("graphic"), 6).unwrap();
        assert_eq!((graphic.dimensionality, graphic.threshold), (Measure::Observed(1), Measure::Observed(2)));
        assert!(graphic.dimensionality_exact && graphic.threshold_exact && !graphic.bounded);
        assert_eq!(graphic.witness().unwrap(), cycle_graph(3).unwrap());
        assert_eq!(graphic.rank_sequence, vec![0, 1, 2, 3, 4, 5]);

        let even = compute_profile(&oracle("even-cycle"), 6).unwrap();
        assert_eq!(even.exact_unbounded(), Some(DimThreshold { d: 1, t: 3 }));
        assert_eq!(
            crate::graph::canon::canonical_form(&even.witness().unwrap()),
            crate::graph::canonical_form(&cycle_graph(4).unwrap())
        );

        let laman = compute_profile(&oracle("count:k=2,l=3"), 6).unwrap();
        assert_eq!(laman.exact_unbounded(), Some(DimThreshold { d: 2, t: 3 }));
        assert!(laman.witness().unwrap().is_complete());
    }

    #[test]
    fn bounded_and_trivial_profiles() {
        let stars = compute_profile(&oracle("stars:m=3"), 5).unwrap();
        assert!(stars.bounded && stars.dimensionality_exact);
        assert_eq!(stars.dimensionality, Measure::Observed(0));
        assert_eq!(stars.bounded_rank, Some(3));

        let trivial = Oracle::from_predicate("free", |_| true);
        let p = compute_profile(&trivial, 5).unwrap();
        assert!(!p.nontrivial);
        assert_eq!(p.threshold, Measure::AtLeast(5));
        assert!(compute_profile(&trivial, 9).is_err());
        assert_eq!(serde_json::to_value(p.threshold).unwrap(), serde_json::json!({"at_least": 5}));
    }

    #[test]
    fn boundedness_probe() {
        assert!(matches!(probe_boundedness(&oracle("uniform:k=3"), 8).unwrap(), Boundedness::Bounded { .. }));
        assert_eq!(probe_boundedness(&oracle("graphic"), 8).unwrap(), Boundedness::UnboundedUpTo { horizon: 8 });
        match probe_boundedness(&oracle("stars:m=3"), 8).unwrap() {
            Boundedness::Bounded { witness } => assert_eq!(witness, star_graph(3).unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bounded_ranks() {
        assert_eq!(bounded_rank(&oracle("uniform:k=4")).unwrap(), 4);
        assert_eq!(bounded_rank(&oracle("stars:m=3")).unwrap(), 3);
        assert_eq!(bounded_rank(&oracle("trunc(graphic,k=5)")).unwrap(), 5);
        assert!(matches!(bounded_rank(&oracle("graphic")), Err(crate::Error::Precondition(_))));
    }

    #[test]
    fn small_circuits() {
        let s = small_circuit_min_degree_one(&oracle("stars:m=3")).unwrap().unwrap();
        assert_eq!(s.m, 3);
        assert_eq!(crate::graph::canonical_form(&s.witness), crate::graph::canonical_form(&star_graph(3).unwrap()));
        assert_eq!(small_circuit_min_degree_one(&oracle("uniform:k=3")).unwrap(), None);
        assert_eq!(small_circuit_min_degree_one(&oracle("trunc(bicircular,k=6)")).unwrap(), None);
    }

    #[test]
    fn redundant_rigidity() {
        let graphic = oracle("graphic");
        assert!(is_k_redundantly_rigid(&graphic, &complete_graph(4).unwrap(), 1).unwrap());
        assert!(is_k_redundantly_rigid(&graphic, &cycle_graph(4).unwrap(), 1).unwrap());
        let bowtie = g(&[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert!(!is_k_redundantly_rigid(&graphic, &bowtie, 1).unwrap());
        assert!(is_k_redundantly_rigid(&graphic, &complete_graph(3).unwrap(), 2).is_err());
        let path = crate::graph::path_graph(3).unwrap();
        assert!(is_k_redundantly_rigid(&graphic, &path, 1).unwrap());
        assert!(!is_k_redundantly_rigid_strict(&graphic, &path, 1).unwrap());
        assert!(is_k_redundantly_rigid_strict(&graphic, &cycle_graph(4).unwrap(), 1).unwrap());
    }

    #[test]
    fn abstract_rigidity() {
        for (spec, expected) in [("rigidity:d=2", true), ("count:k=2,l=3", true), ("bicircular", false)] {
            let o = oracle(spec);
            let p = compute_profile(&o, 6).unwrap();
            assert_eq!(classify_abstract_rigidity(&p, &o).unwrap(), expected, "{spec}");
        }
        let stars = oracle("stars:m=3");
        assert!(classify_abstract_rigidity(&compute_profile(&stars, 4).unwrap(), &stars).is_err());
    }

    #[test]
    fn one_extendability() {
        let r = probe_one_extendability(&oracle("even-cycle"), 1, 6, 0, 0).unwrap();
        let v = r.counterexample.unwrap();
        assert_eq!(v.graph, cycle_graph(3).unwrap());
        assert_eq!(crate::graph::canonical_form(&v.split), crate::graph::canonical_form(&cycle_graph(4).unwrap()));
        assert!(v.extra.is_empty());
        assert_eq!(probe_one_extendability(&oracle("graphic"), 1, 6, 20, 7).unwrap().counterexample, None);
        assert_eq!(probe_one_extendability(&oracle("count:k=2,l=3"), 2, 6, 20, 7).unwrap().counterexample, None);
        assert!(probe_one_extendability(&oracle("graphic"), 2, 4, 0, 0).is_err());
    }

    #[test]
    fn removable_vertices() {
        let graphic = oracle("graphic");
        assert!(find_removable_vertex(&graphic, &complete_graph(4).unwrap(), 1).unwrap().is_some());
        assert!(find_removable_vertex(&oracle("rigidity:d=2"), &complete_graph(5).unwrap(), 2).unwrap().is_some());
        let star = star_graph(4).unwrap();
        let v = find_removable_vertex(&graphic, &star, 1).unwrap().unwrap();
        assert_eq!(star.degree(v), 1);
        assert_eq!(find_removable_vertex(&oracle("rigidity:d=2"), &complete_graph(5).unwrap(), 1).unwrap(), None);
        assert_eq!(removable_vertex_degree_bound(&graphic, DimThreshold { d: 1, t: 2 }).unwrap(), 12);
    }
}
