//! Matroid isomorphisms between `M(G)` and `M(H)`, and whether they come
//! from graph isomorphisms.
//!
//! A bijection of edge sets is a matroid isomorphism exactly when it maps the
//! circuits of `M(G)` onto the circuits of `M(H)`. The search assigns the
//! edges of `G` in order, only to edges of `H` with the same signature (the
//! number of circuits of each size through the edge), and checks each circuit
//! of `G` as soon as its last edge is assigned. Since both sides have the same
//! number of circuits, mapping every circuit to a circuit suffices.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{BuildHasherDefault, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, limit, precondition, Result};
use crate::graph::canon::are_isomorphic;
use crate::graph::{enumerate_graphs_by_edges, Edge, Graph, Vertex};
use crate::matroid::circuits::next_combination;
use crate::matroid::{bridges, circuits, Oracle};

/// Largest edge count for the isomorphism search. Circuits are found by
/// subset enumeration, which bounds the work further.
pub const ISOMORPHISM_EDGE_CAP: usize = 32;
/// Largest graph accepted by [`is_reconstructible`].
pub const RECONSTRUCTION_EDGE_CAP: usize = 8;
/// Default number of vertices a candidate host may have beyond `|V(G)|`.
pub const DEFAULT_EXTRA_VERTICES: usize = 2;

/// A bijection `E(G) -> E(H)`, stored as pairs sorted by source edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeBijection {
    pairs: Vec<(Edge, Edge)>,
}

impl EdgeBijection {
    pub fn new(pairs: impl IntoIterator<Item = (Edge, Edge)>) -> Result<EdgeBijection> {
        let mut pairs: Vec<(Edge, Edge)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        let sources: HashSet<Edge> = pairs.iter().map(|p| p.0).collect();
        let targets: HashSet<Edge> = pairs.iter().map(|p| p.1).collect();
        if sources.len() != pairs.len() || targets.len() != pairs.len() {
            return invalid("an edge bijection must be injective in both directions");
        }
        Ok(EdgeBijection { pairs })
    }

    pub fn identity(edges: &[Edge]) -> EdgeBijection {
        let mut pairs: Vec<(Edge, Edge)> = edges.iter().map(|&e| (e, e)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        EdgeBijection { pairs }
    }

    pub fn pairs(&self) -> &[(Edge, Edge)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn apply(&self, e: Edge) -> Option<Edge> {
        self.pairs.binary_search_by_key(&e, |p| p.0).ok().map(|i| self.pairs[i].1)
    }

    /// Sorted image of a set of source edges; `None` if some edge is outside
    /// the domain.
    pub fn image(&self, set: &[Edge]) -> Option<Vec<Edge>> {
        let mut out = set.iter().map(|&e| self.apply(e)).collect::<Option<Vec<Edge>>>()?;
        out.sort_unstable();
        Some(out)
    }

    /// Whether this maps `E(G)` onto `E(H)`.
    pub fn is_between(&self, g: &Graph, h: &Graph) -> bool {
        let mut targets: Vec<Edge> = self.pairs.iter().map(|p| p.1).collect();
        targets.sort_unstable();
        self.pairs.iter().map(|p| p.0).eq(g.edges().iter().copied()) && targets == h.edges()
    }
}

/// Circuit masks are already well mixed bit patterns; a multiplicative hash
/// is several times faster than the default here.
#[derive(Default)]
struct MaskHasher(u64);

impl Hasher for MaskHasher {
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }

    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0 ^ x ^ (x >> 31)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    }

    fn finish(&self) -> u64 {
        self.0 ^ (self.0 >> 29)
    }
}

type MaskSet = HashSet<u64, BuildHasherDefault<MaskHasher>>;

struct CircuitIndex {
    masks: Vec<u64>,
    /// Per edge: number of circuits of each size through it.
    signature: Vec<Vec<usize>>,
    /// Per ordered pair of edges `(i, j)` at `i * m + j`: number of circuits
    /// of each size through both.
    pairs: Vec<Vec<usize>>,
    sizes: Vec<usize>,
}

fn circuit_index(oracle: &Oracle, g: &Graph) -> Result<CircuitIndex> {
    let m = g.edge_count();
    let found = circuits(oracle, g, Some(m))?;
    let mut masks = Vec::with_capacity(found.len());
    let mut signature = vec![vec![0; m + 1]; m];
    let mut pairs = vec![vec![0; m + 1]; m * m];
    for c in &found {
        let idx: Vec<usize> = c.iter().map(|e| g.edge_index(*e).expect("circuit edges lie in the host")).collect();
        for &i in &idx {
            signature[i][c.len()] += 1;
            for &j in &idx {
                pairs[i * m + j][c.len()] += 1;
            }
        }
        masks.push(idx.iter().fold(0u64, |acc, &i| acc | 1 << i));
    }
    let mut sizes: Vec<usize> = found.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    Ok(CircuitIndex { masks, signature, pairs, sizes })
}

fn map_mask(mask: u64, image: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << image[i];
        rest &= rest - 1;
    }
    out
}

/// Calls `emit` on every matroid isomorphism `M(G) -> M(H)` in lexicographic
/// order of target positions, until it returns `false`.
fn each_isomorphism(
    oracle: &Oracle,
    g: &Graph,
    h: &Graph,
    ig: &CircuitIndex,
    ih: &CircuitIndex,
    emit: &mut dyn FnMut(EdgeBijection) -> Result<bool>,
) -> Result<()> {
    let m = g.edge_count();
    if m != h.edge_count() || ig.sizes != ih.sizes {
        return Ok(());
    }
    if oracle.rank_edges(g.edges())? != oracle.rank_edges(h.edges())? {
        return Ok(());
    }
    let targets: MaskSet = ih.masks.iter().copied().collect();
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); m];
    for &c in &ig.masks {
        closing[63 - c.leading_zeros() as usize].push(c);
    }
    // Small circuits reject a wrong candidate soonest.
    for list in &mut closing {
        list.sort_by_key(|c| c.count_ones());
    }
    // Pair counts as small ids shared by both sides, so candidates are
    // compared against every assigned edge in constant time.
    fn intern<'a>(ids: &mut HashMap<&'a [usize], u32>, counts: &'a [Vec<usize>]) -> Vec<u32> {
        counts
            .iter()
            .map(|c| {
                let next = ids.len() as u32;
                *ids.entry(c).or_insert(next)
            })
            .collect()
    }
    let mut ids = HashMap::new();
    let (pg, ph) = (intern(&mut ids, &ig.pairs), intern(&mut ids, &ih.pairs));
    let mut image = vec![usize::MAX; m];
    let mut used = vec![false; m];

    struct Ctx<'a> {
        g: &'a Graph,
        h: &'a Graph,
        ig: &'a CircuitIndex,
        ih: &'a CircuitIndex,
        targets: MaskSet,
        closing: Vec<Vec<u64>>,
        pg: Vec<u32>,
        ph: Vec<u32>,
    }

    fn dfs(
        ctx: &Ctx,
        i: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        emit: &mut dyn FnMut(EdgeBijection) -> Result<bool>,
    ) -> Result<bool> {
        let m = image.len();
        if i == m {
            let pairs = (0..m).map(|k| (ctx.g.edges()[k], ctx.h.edges()[image[k]]));
            return emit(EdgeBijection { pairs: pairs.collect() });
        }
        for j in 0..m {
            if used[j]
                || ctx.ig.signature[i] != ctx.ih.signature[j]
                || (0..i).any(|k| ctx.pg[i * m + k] != ctx.ph[j * m + image[k]])
            {
                continue;
            }
            image[i] = j;
            if ctx.closing[i].iter().all(|&c| ctx.targets.contains(&map_mask(c, image))) {
                used[j] = true;
                let go_on = dfs(ctx, i + 1, image, used, emit)?;
                used[j] = false;
                if !go_on {
                    return Ok(false);
                }
            }
        }
        image[i] = usize::MAX;
        Ok(true)
    }

    let ctx = Ctx { g, h, ig, ih, targets, closing, pg, ph };
    dfs(&ctx, 0, &mut image, &mut used, emit)?;
    Ok(())
}

fn check_isomorphism_size(g: &Graph, h: &Graph) -> Result<()> {
    let m = g.edge_count().max(h.edge_count());
    if m > ISOMORPHISM_EDGE_CAP {
        return limit(format!("matroid isomorphism search supports at most {ISOMORPHISM_EDGE_CAP} edges, got {m}"));
    }
    Ok(())
}

/// Up to `limit` matroid isomorphisms `M(G) -> M(H)`.
pub fn matroid_isomorphisms(oracle: &Oracle, g: &Graph, h: &Graph, limit: usize) -> Result<Vec<EdgeBijection>> {
    check_isomorphism_size(g, h)?;
    let mut out = Vec::new();
    if limit == 0 || g.edge_count() != h.edge_count() {
        return Ok(out);
    }
    let (ig, ih) = (circuit_index(oracle, g)?, circuit_index(oracle, h)?);
    each_isomorphism(oracle, g, h, &ig, &ih, &mut |psi| {
        out.push(psi);
        Ok(out.len() < limit)
    })?;
    Ok(out)
}

/// Whether `psi` maps `E(G)` onto `E(H)` and circuits onto circuits.
pub fn is_matroid_isomorphism(oracle: &Oracle, g: &Graph, h: &Graph, psi: &EdgeBijection) -> Result<bool> {
    check_isomorphism_size(g, h)?;
    if !psi.is_between(g, h) {
        return Ok(false);
    }
    let mut mapped: Vec<Vec<Edge>> = circuits(oracle, g, Some(g.edge_count()))?
        .iter()
        .map(|c| psi.image(c).expect("psi is defined on E(G)"))
        .collect();
    let mut target = circuits(oracle, h, Some(h.edge_count()))?;
    mapped.sort();
    target.sort();
    Ok(mapped == target)
}

/// Whether every vertex star of `G` is mapped onto a vertex star of `H`.
/// Isolated vertices have empty stars and are ignored.
pub fn star_preserving(g: &Graph, h: &Graph, psi: &EdgeBijection) -> bool {
    if !psi.is_between(g, h) {
        return false;
    }
    let stars: HashSet<Vec<Edge>> = h.vertices().iter().map(|&v| h.star(v)).collect();
    g.vertices().iter().all(|&v| {
        let s = g.star(v);
        s.is_empty() || stars.contains(&psi.image(&s).expect("psi is defined on E(G)"))
    })
}

fn induces(g: &Graph, psi: &EdgeBijection, phi: &HashMap<Vertex, Vertex>) -> bool {
    g.edges().iter().all(|&e| match (phi.get(&e.u()), phi.get(&e.v())) {
        (Some(&a), Some(&b)) => a != b && psi.apply(e) == Some(Edge::new(a, b)),
        _ => false,
    })
}

/// A vertex bijection `phi` with `psi(uv) = phi(u) phi(v)` for every edge, if
/// there is one. It is assembled from stars: `psi` is induced exactly when it
/// maps vertex stars to vertex stars.
pub fn induced_by_graph_isomorphism(
    g: &Graph,
    h: &Graph,
    psi: &EdgeBijection,
) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    if g.has_isolated_vertices() || h.has_isolated_vertices() {
        return invalid("graph isomorphisms are only compared on graphs without isolated vertices");
    }
    if !psi.is_between(g, h) {
        return invalid("the bijection must map E(G) onto E(H)");
    }
    if g.vertex_count() != h.vertex_count() || !star_preserving(g, h, psi) {
        return Ok(None);
    }
    let mut by_star: HashMap<Vec<Edge>, Vec<Vertex>> = HashMap::new();
    for &v in h.vertices() {
        by_star.entry(h.star(v)).or_default().push(v);
    }
    // Two vertices share a star only at the ends of a K_2 component.
    let mut phi: HashMap<Vertex, Vertex> = HashMap::new();
    let mut taken: HashSet<Vertex> = HashSet::new();
    for &v in g.vertices() {
        let image = psi.image(&g.star(v)).expect("psi is defined on E(G)");
        let Some(&w) = by_star[&image].iter().find(|w| !taken.contains(w)) else {
            return Ok(None);
        };
        taken.insert(w);
        phi.insert(v, w);
    }
    if !induces(g, psi, &phi) {
        return Ok(None);
    }
    Ok(Some(g.vertices().iter().map(|v| (*v, phi[v])).collect()))
}

/// Exhaustive search over vertex bijections `V(G) -> V(H)` for one inducing
/// `psi`, independent of the star criterion. Partial maps are abandoned as
/// soon as an edge between mapped vertices disagrees.
pub fn brute_force_inducing_map(g: &Graph, h: &Graph, psi: &EdgeBijection) -> Option<Vec<(Vertex, Vertex)>> {
    if g.vertex_count() != h.vertex_count() || !psi.is_between(g, h) {
        return None;
    }
    fn extend(
        g: &Graph,
        h: &Graph,
        psi: &EdgeBijection,
        i: usize,
        phi: &mut HashMap<Vertex, Vertex>,
        used: &mut HashSet<Vertex>,
    ) -> bool {
        let Some(&v) = g.vertices().get(i) else {
            return true;
        };
        for &w in h.vertices() {
            if used.contains(&w) {
                continue;
            }
            let consistent = g.neighbors(v).iter().all(|x| match phi.get(x) {
                Some(&y) => psi.apply(Edge::new(v, *x)) == Some(Edge::new(w, y)),
                None => true,
            });
            if !consistent {
                continue;
            }
            phi.insert(v, w);
            used.insert(w);
            if extend(g, h, psi, i + 1, phi, used) {
                return true;
            }
            phi.remove(&v);
            used.remove(&w);
        }
        false
    }
    let mut phi = HashMap::new();
    let mut used = HashSet::new();
    if !extend(g, h, psi, 0, &mut phi, &mut used) || !induces(g, psi, &phi) {
        return None;
    }
    Some(g.vertices().iter().map(|v| (*v, phi[v])).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionWitness {
    pub host: Graph,
    /// A matroid isomorphism `M(G) -> M(host)` induced by no graph
    /// isomorphism.
    pub bijection: EdgeBijection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionVerdict {
    /// Relative to the horizon: hosts with more vertices were not examined.
    pub reconstructible: bool,
    /// Largest vertex count of a candidate host.
    pub horizon: usize,
    pub hosts_examined: usize,
    pub witness: Option<ReconstructionWitness>,
}

fn hosts(m: usize, max_vertices: usize) -> Result<Arc<Vec<Graph>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<(usize, usize), Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(found) = cache.lock().expect("host cache poisoned").get(&(m, max_vertices)) {
        return Ok(found.clone());
    }
    let all = enumerate_graphs_by_edges(m, max_vertices)?;
    let exact = Arc::new(all.into_iter().filter(|h| h.edge_count() == m).collect::<Vec<_>>());
    cache.lock().expect("host cache poisoned").insert((m, max_vertices), exact.clone());
    Ok(exact)
}

/// Whether every matroid isomorphism from `M(G)` to `M(H)`, over all hosts
/// `H` without isolated vertices on at most `|V(G)| + n_extra` vertices, is
/// induced by a graph isomorphism. Hosts are visited in enumeration order and
/// the first non-induced isomorphism is returned as the witness, after an
/// exhaustive check over vertex bijections.
pub fn is_reconstructible(oracle: &Oracle, g: &Graph, n_extra: usize) -> Result<ReconstructionVerdict> {
    let m = g.edge_count();
    if m > RECONSTRUCTION_EDGE_CAP {
        return limit(format!("reconstructibility is checked up to {RECONSTRUCTION_EDGE_CAP} edges, got {m}"));
    }
    if m == 0 || g.has_isolated_vertices() {
        return invalid("reconstructibility needs a graph with edges and no isolated vertices");
    }
    let horizon = g.vertex_count() + n_extra;
    let candidates = hosts(m, horizon)?;
    let ig = circuit_index(oracle, g)?;
    let found = candidates
        .par_iter()
        .enumerate()
        .map(|(i, h)| -> Result<Option<(usize, EdgeBijection)>> {
            let ih = circuit_index(oracle, h)?;
            let mut witness = None;
            each_isomorphism(oracle, g, h, &ig, &ih, &mut |psi| {
                if induced_by_graph_isomorphism(g, h, &psi)?.is_some() {
                    return Ok(true);
                }
                witness = Some(psi);
                Ok(false)
            })?;
            Ok(witness.map(|w| (i, w)))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    let Some((i, bijection)) = found else {
        return Ok(ReconstructionVerdict {
            reconstructible: true,
            horizon,
            hosts_examined: candidates.len(),
            witness: None,
        });
    };
    let host = candidates[i].clone();
    if brute_force_inducing_map(g, &host, &bijection).is_some() {
        return precondition("star criterion and exhaustive search disagree on a matroid isomorphism");
    }
    Ok(ReconstructionVerdict {
        reconstructible: false,
        horizon,
        hosts_examined: i + 1,
        witness: Some(ReconstructionWitness { host, bijection }),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeWitness {
    pub bridge: Edge,
    pub vertex: Vertex,
    /// `G - e + v u1`.
    pub g1: Graph,
    /// `G - e + u1 u2`.
    pub g2: Graph,
    pub psi1: EdgeBijection,
    pub psi2: EdgeBijection,
}

/// For a bridge `e` of `M(G)` and a vertex `v` off `e`, the graphs
/// `G1 = G - e + v u1` and `G2 = G - e + u1 u2` with fresh `u1`, `u2`.
/// Moving the bridge gives matroid isomorphisms from `M(G)` to both, which
/// are checked, as is `G1 ≇ G2`; so `G` is isomorphic to at most one of them.
pub fn bridge_witness(oracle: &Oracle, g: &Graph) -> Result<Option<BridgeWitness>> {
    if g.edge_count() < 2 || g.has_isolated_vertices() {
        return invalid("bridge witnesses need at least two edges and no isolated vertices");
    }
    if oracle.spec().and_then(|s| s.is_bounded()) == Some(true) {
        return invalid(format!("{} is bounded; moving a bridge need not preserve the matroid", oracle.name()));
    }
    let found = bridges(oracle, g)?;
    let Some((e, v)) = found.iter().find_map(|&e| g.vertices().iter().find(|&&v| !e.is_incident(v)).map(|&v| (e, v)))
    else {
        return Ok(None);
    };
    let u1 = g.fresh_label();
    let rest = g.without_edge(e).drop_isolated();
    let (f1, f2) = (Edge::new(v, u1), Edge::new(u1, u1 + 1));
    let (g1, g2) = (rest.with_edge(f1), rest.with_edge(f2));
    let moved = |f: Edge| EdgeBijection::new(g.edges().iter().map(|&x| (x, if x == e { f } else { x })));
    let (psi1, psi2) = (moved(f1)?, moved(f2)?);
    if !is_matroid_isomorphism(oracle, g, &g1, &psi1)? || !is_matroid_isomorphism(oracle, g, &g2, &psi2)? {
        return precondition(format!("moving the bridge {e} changed the matroid in {}", oracle.name()));
    }
    if are_isomorphic(&g1, &g2) {
        return precondition("the two relocated graphs are isomorphic");
    }
    Ok(Some(BridgeWitness { bridge: e, vertex: v, g1, g2, psi1, psi2 }))
}

/// An `m`-edge subgraph without isolated vertices that has a vertex of degree
/// one. A vertex of degree at least `m` gives the star `K_{1,m}`; otherwise,
/// with at least `2m - 1` edges, one edge at a vertex `v` plus `m - 1` edges
/// of `G - v` works. Smaller graphs are searched exhaustively.
pub fn min_degree_one_subgraph(g: &Graph, m: usize) -> Option<Graph> {
    if m == 0 || g.edge_count() < m {
        return None;
    }
    if let Some(&c) = g.vertices().iter().find(|&&v| g.degree(v) >= m) {
        return Some(Graph::from_edge_set(g.star(c).into_iter().take(m)));
    }
    if g.edge_count() + 1 >= 2 * m {
        let v = *g.vertices().iter().find(|&&v| g.degree(v) >= 1)?;
        let mut edges = vec![g.star(v)[0]];
        edges.extend(g.without_vertex(v).edges().iter().copied().take(m - 1));
        return Some(Graph::from_edge_set(edges));
    }
    let all = g.edges();
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        let h = Graph::from_edge_set(idx.iter().map(|&i| all[i]));
        if h.min_degree() == Some(1) {
            return Some(h);
        }
        if !next_combination(&mut idx, all.len()) {
            return None;
        }
    }
}

/// The first non-edge `uv` (in lexicographic order) that raises the rank;
/// it is then a bridge of `M(G + uv)`. Exists exactly when `G` is not rigid.
pub fn rank_increasing_nonedge(oracle: &Oracle, g: &Graph) -> Result<Option<Edge>> {
    let r = oracle.rank_edges(g.edges())?;
    let vs = g.vertices();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            let e = Edge::new(a, b);
            if !g.has_edge(e) && oracle.rank_edges(g.with_edge(e).edges())? > r {
                return Ok(Some(e));
            }
        }
    }
    Ok(None)
}
