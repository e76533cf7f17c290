//! Finite simple graphs and the graph-theoretic operations the matroid code
//! is built on.
//!
//! Vertex labels are small non-negative integers. A [`Graph`] stores a sorted
//! vertex list and a sorted edge list; edges are normalized so that the
//! smaller label comes first, which makes the derived `Ord` on [`Edge`] the
//! lexicographic order on `(min endpoint, max endpoint)` used everywhere a
//! deterministic edge order is needed.

pub mod canon;
pub mod connectivity;
pub mod enumerate;
pub mod io;
pub mod subgraph;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};

pub use canon::{canonical_form, find_isomorphism, CanonicalForm};
pub use connectivity::vertex_connectivity;
pub use enumerate::{enumerate_graphs, enumerate_graphs_by_edges, enumerate_graphs_capped};

pub type Vertex = u32;

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Panics on a loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert_ne!(a, b, "loops are not allowed in simple graphs");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Result<Edge> {
        if a == b {
            return invalid(format!("loop at vertex {a}"));
        }
        Ok(Edge::new(a, b))
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn is_incident(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn other(self, x: Vertex) -> Option<Vertex> {
        if self.0 == x {
            Some(self.1)
        } else if self.1 == x {
            Some(self.0)
        } else {
            None
        }
    }

    pub fn map(self, f: impl Fn(Vertex) -> Vertex) -> Edge {
        Edge::new(f(self.0), f(self.1))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0, self.1].serialize(s)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Edge {
        Edge::new(a, b)
    }
}

/// A finite simple graph. Immutable once built; the "mutating" operations
/// return new graphs.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Graph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from an explicit vertex set and edge list. Rejects
    /// loops, repeated edges and endpoints missing from the vertex set.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph> {
        let vertex_set: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            let e = Edge::try_new(a, b)?;
            if !vertex_set.contains(&a) || !vertex_set.contains(&b) {
                return invalid(format!("edge {e} has an endpoint outside the vertex set"));
            }
            if !edge_set.insert(e) {
                return invalid(format!("parallel edge {e}"));
            }
        }
        Ok(Graph { vertices: vertex_set.into_iter().collect(), edges: edge_set.into_iter().collect() })
    }

    /// Graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        let vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        Graph::new(vertices, edges)
    }

    /// Graph spanned by a set of already-normalized edges; duplicates are merged.
    pub fn from_edge_set(edges: impl IntoIterator<Item = Edge>) -> Graph {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
        Graph { vertices: vertices.into_iter().collect(), edges: edges.into_iter().collect() }
    }

    pub(crate) fn from_sorted_parts(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Graph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Graph { vertices, edges }
    }

    pub fn empty() -> Graph {
        Graph::default()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.is_incident(v)).count()
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.edges.iter().filter_map(|e| e.other(v)).collect();
        out.sort_unstable();
        out
    }

    /// The vertex star: all edges incident to `v`.
    pub fn star(&self, v: Vertex) -> Vec<Edge> {
        self.edges.iter().copied().filter(|e| e.is_incident(v)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices.iter().map(|&v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.vertices.iter().any(|&v| !self.edges.iter().any(|e| e.is_incident(v)))
    }

    /// The normalized form used throughout: no isolated vertices.
    pub fn is_normalized(&self) -> bool {
        !self.has_isolated_vertices()
    }

    pub fn max_label(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    /// Smallest label strictly larger than every label in use.
    pub fn fresh_label(&self) -> Vertex {
        self.max_label().map_or(0, |m| m + 1)
    }

    pub fn with_vertex(&self, v: Vertex) -> Graph {
        let mut vertices = self.vertices.clone();
        if let Err(pos) = vertices.binary_search(&v) {
            vertices.insert(pos, v);
        }
        Graph::from_sorted_parts(vertices, self.edges.clone())
    }

    /// Adds `e`, adding its endpoints to the vertex set if needed.
    pub fn with_edge(&self, e: Edge) -> Graph {
        let mut g = self.with_vertex(e.0).with_vertex(e.1);
        if let Err(pos) = g.edges.binary_search(&e) {
            g.edges.insert(pos, e);
        }
        g
    }

    /// Removes `e` but keeps its endpoints.
    pub fn without_edge(&self, e: Edge) -> Graph {
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Graph::from_sorted_parts(self.vertices.clone(), edges)
    }

    pub fn without_vertices(&self, removed: &[Vertex]) -> Graph {
        let vertices = self.vertices.iter().copied().filter(|v| !removed.contains(v)).collect();
        let edges = self.edges.iter().copied().filter(|e| !removed.contains(&e.0) && !removed.contains(&e.1)).collect();
        Graph::from_sorted_parts(vertices, edges)
    }

    pub fn without_vertex(&self, v: Vertex) -> Graph {
        self.without_vertices(&[v])
    }

    pub fn drop_isolated(&self) -> Graph {
        Graph::from_edge_set(self.edges.iter().copied())
    }

    /// Subgraph induced by a vertex subset.
    pub fn induced_on_vertices(&self, keep: &[Vertex]) -> Graph {
        let vertices: BTreeSet<Vertex> = keep.iter().copied().filter(|v| self.has_vertex(*v)).collect();
        let edges = self.edges.iter().copied().filter(|e| vertices.contains(&e.0) && vertices.contains(&e.1)).collect();
        Graph::from_sorted_parts(vertices.into_iter().collect(), edges)
    }

    pub fn union(&self, other: &Graph) -> Graph {
        let vertices: BTreeSet<Vertex> = self.vertices.iter().chain(other.vertices.iter()).copied().collect();
        let edges: BTreeSet<Edge> = self.edges.iter().chain(other.edges.iter()).copied().collect();
        Graph::from_sorted_parts(vertices.into_iter().collect(), edges.into_iter().collect())
    }

    /// Relabels through `f`, which must be injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Graph> {
        let vertices: Vec<Vertex> = self.vertices.iter().map(|&v| f(v)).collect();
        let distinct: BTreeSet<Vertex> = vertices.iter().copied().collect();
        if distinct.len() != vertices.len() {
            return invalid("relabeling is not injective");
        }
        let edges: BTreeSet<Edge> = self.edges.iter().map(|e| e.map(&f)).collect();
        Ok(Graph::from_sorted_parts(distinct.into_iter().collect(), edges.into_iter().collect()))
    }

    /// Relabels to `0..n-1` preserving label order; returns the original labels
    /// indexed by new label.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let old = self.vertices.clone();
        let edges = self.edges.iter().map(|e| Edge(self.index_of(e.0), self.index_of(e.1))).collect();
        let vertices = (0..old.len() as Vertex).collect();
        (Graph::from_sorted_parts(vertices, edges), old)
    }

    fn index_of(&self, v: Vertex) -> Vertex {
        self.vertices.binary_search(&v).expect("vertex present") as Vertex
    }

    /// Adjacency rows as bitmasks over vertex positions (position = index in
    /// the sorted vertex list). Only for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.vertices.len() > 64 {
            return None;
        }
        let mut adj = vec![0u64; self.vertices.len()];
        for e in &self.edges {
            let (a, b) = (self.index_of(e.0) as usize, self.index_of(e.1) as usize);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Some(adj)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut dsu = DisjointSets::new(self.vertices.len());
        for e in &self.edges {
            dsu.union(self.index_of(e.0) as usize, self.index_of(e.1) as usize);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<Vertex>> = Default::default();
        for (i, &v) in self.vertices.iter().enumerate() {
            groups.entry(dsu.find(i)).or_default().push(v);
        }
        let mut comps: Vec<Vec<Vertex>> = groups.into_values().collect();
        comps.sort();
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        crate::families::graphic_independent(self.edges())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}, E={:?})", self.vertices, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Union-find over `0..n`, shared by the forest-like oracles.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> DisjointSets {
        DisjointSets { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// `K_n` on labels `0..n-1`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("complete graph needs at least one vertex");
    }
    let n = n as Vertex;
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| Edge(a, b))).collect();
    Ok(Graph::from_sorted_parts((0..n).collect(), edges))
}

/// Cycle `C_n` on `0..n-1`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid("a cycle needs at least three vertices");
    }
    let n = n as Vertex;
    Graph::from_edges((0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `P_n` with `n` vertices and `n - 1` edges, `n >= 2`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return invalid("a path needs at least two vertices");
    }
    Graph::from_edges((0..n as Vertex - 1).map(|i| (i, i + 1)))
}

/// Star `K_{1,m}` with center 0.
pub fn star_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return invalid("a star needs at least one leaf");
    }
    Graph::from_edges((1..=m as Vertex).map(|i| (0, i)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return invalid("both sides of a complete bipartite graph must be nonempty");
    }
    let (a, b) = (a as Vertex, b as Vertex);
    Graph::from_edges((0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
}

/// `m` pairwise disjoint edges.
pub fn matching_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return invalid("a matching needs at least one edge");
    }
    Graph::from_edges((0..m as Vertex).map(|i| (2 * i, 2 * i + 1)))
}

/// Disjoint union; the second graph is shifted past the labels of the first.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.fresh_label();
    let shifted = b.relabel(|v| v + shift).expect("shift is injective");
    a.union(&shifted)
}

/// The subgraph `G[E0]`: edge set `E0` on vertex set `V(E0)`.
pub fn induced_by_edges(g: &Graph, e0: &[Edge]) -> Result<Graph> {
    if let Some(e) = e0.iter().find(|e| !g.has_edge(**e)) {
        return invalid(format!("edge {e} is not in the host graph"));
    }
    Ok(Graph::from_edge_set(e0.iter().copied()))
}

/// Adds one new vertex joined to every existing vertex.
pub fn cone(g: &Graph) -> Graph {
    let apex = g.fresh_label();
    let mut out = g.with_vertex(apex);
    let mut edges = out.edges.clone();
    edges.extend(g.vertices.iter().map(|&v| Edge::new(v, apex)));
    edges.sort_unstable();
    out.edges = edges;
    out
}

/// The `d`-dimensional edge split: delete `uv` and add a new vertex joined to
/// `u`, `v` and the `d - 1` vertices of `extra`.
pub fn edge_split(g: &Graph, uv: Edge, extra: &[Vertex], d: usize) -> Result<Graph> {
    if d == 0 {
        return invalid("edge split dimension must be positive");
    }
    if !g.has_edge(uv) {
        return invalid(format!("edge {uv} is not in the graph"));
    }
    if extra.len() != d - 1 {
        return invalid(format!("a {d}-dimensional split needs {} extra vertices, got {}", d - 1, extra.len()));
    }
    let distinct: BTreeSet<Vertex> = extra.iter().copied().collect();
    if distinct.len() != extra.len() {
        return invalid("extra vertices must be distinct");
    }
    if extra.iter().any(|&x| uv.is_incident(x)) {
        return invalid("extra vertices must avoid the split edge");
    }
    if let Some(x) = extra.iter().find(|&&x| !g.has_vertex(x)) {
        return invalid(format!("extra vertex {x} is not in the graph"));
    }
    let w = g.fresh_label();
    let mut out = g.without_edge(uv);
    for x in [uv.0, uv.1].into_iter().chain(extra.iter().copied()) {
        out = out.with_edge(Edge::new(x, w));
    }
    Ok(out)
}

/// A minimal-by-inclusion `k`-dominating set: every vertex outside the set has
/// at least `k` neighbors inside it. Vertices are offered for removal in order
/// of increasing degree (ties by label), starting from the whole vertex set.
pub fn k_dominating_set(g: &Graph, k: usize) -> Option<Vec<Vertex>> {
    let mut order: Vec<Vertex> = g.vertices.to_vec();
    order.sort_by_key(|&v| (g.degree(v), v));
    let neighbors: std::collections::HashMap<Vertex, Vec<Vertex>> =
        g.vertices.iter().map(|&v| (v, g.neighbors(v))).collect();
    let mut inside: BTreeSet<Vertex> = g.vertices.iter().copied().collect();
    let dominates = |set: &BTreeSet<Vertex>| {
        g.vertices
            .iter()
            .filter(|v| !set.contains(v))
            .all(|v| neighbors[v].iter().filter(|w| set.contains(w)).count() >= k)
    };
    if !dominates(&inside) {
        return None;
    }
    for v in order {
        inside.remove(&v);
        if !dominates(&inside) {
            inside.insert(v);
        }
    }
    Some(inside.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_loops_parallel_edges_and_dangling_endpoints() {
        assert!(Graph::from_edges([(1, 1)]).is_err());
        assert!(Graph::from_edges([(1, 2), (2, 1)]).is_err());
        assert!(Graph::new([0, 1], [(0, 2)]).is_err());
        assert!(Graph::new([0, 1, 5], [(0, 1)]).unwrap().has_isolated_vertices());
    }

    #[test]
    fn complete_graph_sizes() {
        assert!(complete_graph(0).is_err());
        let k1 = complete_graph(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert_eq!(complete_graph(4).unwrap().edge_count(), 6);
        assert_eq!(complete_graph(7).unwrap().edge_count(), 21);
    }

    #[test]
    fn induced_by_edges_cases() {
        let k4 = complete_graph(4).unwrap();
        let tri = [Edge::new(0, 1), Edge::new(0, 2), Edge::new(1, 2)];
        let t = induced_by_edges(&k4, &tri).unwrap();
        assert_eq!(t.vertices(), &[0, 1, 2]);
        assert!(t.is_complete());
        let empty = induced_by_edges(&k4, &[]).unwrap();
        assert_eq!((empty.vertex_count(), empty.edge_count()), (0, 0));
        let m = induced_by_edges(&k4, &[Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count()), (4, 2));
        assert!(induced_by_edges(&k4, &[Edge::new(0, 9)]).is_err());
    }

    #[test]
    fn cone_examples() {
        let k3 = complete_graph(3).unwrap();
        assert!(find_isomorphism(&cone(&k3), &complete_graph(4).unwrap()).unwrap().is_some());
        let w4 = cone(&cycle_graph(4).unwrap());
        assert_eq!(w4.edge_count(), 8);
        assert_eq!(w4.vertex_count(), 5);
        let c = cone(&g(&[(0, 1)]));
        assert!(find_isomorphism(&c, &k3).unwrap().is_some());
    }

    #[test]
    fn edge_split_examples() {
        let c3 = cycle_graph(3).unwrap();
        let c4 = edge_split(&c3, Edge::new(0, 1), &[], 1).unwrap();
        assert!(find_isomorphism(&c4, &cycle_graph(4).unwrap()).unwrap().is_some());

        let k4 = complete_graph(4).unwrap();
        let s = edge_split(&k4, Edge::new(0, 1), &[2], 2).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (5, 8));
        assert_eq!(s.degree(4), 3);

        let p = path_graph(4).unwrap();
        let longer = edge_split(&p, Edge::new(1, 2), &[], 1).unwrap();
        assert!(find_isomorphism(&longer, &path_graph(5).unwrap()).unwrap().is_some());
    }

    #[test]
    fn edge_split_errors() {
        let k4 = complete_graph(4).unwrap();
        assert!(edge_split(&k4, Edge::new(0, 9), &[], 1).is_err());
        assert!(edge_split(&k4, Edge::new(0, 1), &[2, 3], 2).is_err());
        assert!(edge_split(&k4, Edge::new(0, 1), &[1], 2).is_err());
        assert!(edge_split(&k4, Edge::new(0, 1), &[], 0).is_err());
    }

    #[test]
    fn dominating_sets() {
        let k5 = complete_graph(5).unwrap();
        assert_eq!(k_dominating_set(&k5, 1).unwrap().len(), 1);

        let c4 = cycle_graph(4).unwrap();
        let u = k_dominating_set(&c4, 2).unwrap();
        assert_eq!(u.len(), 2);
        assert!(!c4.has_edge(Edge::new(u[0], u[1])), "a diagonal pair");

        let star = star_graph(4).unwrap();
        assert_eq!(k_dominating_set(&star, 1).unwrap(), vec![0]);
    }

    #[test]
    fn dominating_set_is_minimal_and_valid_on_small_graphs() {
        for h in enumerate_graphs(5, |_| true).unwrap() {
            for k in 1..=3 {
                let u = k_dominating_set(&h, k).unwrap();
                let ok = |set: &[Vertex]| {
                    h.vertices()
                        .iter()
                        .filter(|v| !set.contains(v))
                        .all(|&v| h.neighbors(v).iter().filter(|w| set.contains(w)).count() >= k)
                };
                assert!(ok(&u));
                for i in 0..u.len() {
                    let mut smaller = u.clone();
                    smaller.remove(i);
                    assert!(!ok(&smaller), "{h:?} k={k} not minimal: {u:?}");
                }
            }
        }
    }

    #[test]
    fn split_degrees_change_locally() {
        for h in enumerate_graphs(5, |_| true).unwrap() {
            for &e in h.edges() {
                let others: Vec<Vertex> = h.vertices().iter().copied().filter(|&x| !e.is_incident(x)).collect();
                for d in 1..=others.len().min(2) + 1 {
                    let extra = &others[..d - 1];
                    let s = edge_split(&h, e, extra, d).unwrap();
                    let w = h.fresh_label();
                    assert_eq!(s.degree(w), d + 1);
                    for &x in h.vertices() {
                        let delta = s.degree(x) as i64 - h.degree(x) as i64;
                        if extra.contains(&x) {
                            assert_eq!(delta, 1);
                        } else {
                            assert_eq!(delta, 0);
                        }
                    }
                }
            }
        }
    }
}
