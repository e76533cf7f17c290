//! Canonical labeling by individualization and refinement.
//!
//! The canonical code of a graph is the lexicographically smallest upper
//! triangle adjacency bit string over the leaves of the search tree. Twin
//! vertices (same neighborhood apart from each other) are interchangeable, so
//! only one representative of each twin class is individualized per level;
//! automorphisms found at leaves prune further siblings in the same orbit.

use serde::Serialize;

use super::{Edge, Graph, Vertex};
use crate::error::{limit, Result};

/// Vertex cap for [`find_isomorphism`].
pub const ISOMORPHISM_VERTEX_CAP: usize = 10;

/// Isomorphism-class key: vertex count plus packed adjacency bits for the
/// pairs `(0,1), (0,2), .., (n-2,n-1)`, most significant bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: Vec<u64>,
}

impl CanonicalForm {
    /// The canonical representative on labels `0..n-1`.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut pos = 0usize;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[pos / 64] >> (63 - pos % 64) & 1 == 1 {
                    edges.push(Edge::new(i as Vertex, j as Vertex));
                }
                pos += 1;
            }
        }
        Graph::from_sorted_parts((0..self.n as Vertex).collect(), edges)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with the canonical order: `order[i]` is the
/// vertex of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<Vertex>) {
    let adj = g.adjacency_masks().expect("canonical labeling supports at most 64 vertices");
    let (bits, order) = canonical_order(&adj);
    let labels = order.iter().map(|&i| g.vertices()[i]).collect();
    (CanonicalForm { n: adj.len(), bits }, labels)
}

/// The graph relabeled into canonical order on `0..n-1`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

/// A vertex bijection from `g` onto `h` as `(vertex of g, vertex of h)` pairs
/// sorted by the first component.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    let n = g.vertex_count().max(h.vertex_count());
    if n > ISOMORPHISM_VERTEX_CAP {
        return limit(format!("isomorphism search is capped at {ISOMORPHISM_VERTEX_CAP} vertices, got {n}"));
    }
    Ok(isomorphism_uncapped(g, h))
}

pub(crate) fn isomorphism_uncapped(g: &Graph, h: &Graph) -> Option<Vec<(Vertex, Vertex)>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let (fg, og) = canonical_labeling(g);
    let (fh, oh) = canonical_labeling(h);
    if fg != fh {
        return None;
    }
    let mut map: Vec<(Vertex, Vertex)> = og.into_iter().zip(oh).collect();
    map.sort_unstable();
    Some(map)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism_uncapped(g, h).is_some()
}

type Cells = Vec<Vec<usize>>;

fn canonical_order(adj: &[u64]) -> (Vec<u64>, Vec<usize>) {
    let n = adj.len();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut st = Search { adj, first: None, best: None, autos: Vec::new(), path: Vec::new() };
    st.run(vec![(0..n).collect()]);
    let best = st.best.expect("search visits at least one leaf");
    (best.code, best.order)
}

#[derive(Clone)]
struct Leaf {
    code: Vec<u64>,
    order: Vec<usize>,
    path: Vec<usize>,
}

/// Stored automorphisms are capped; pruning stays sound with fewer.
const AUTOMORPHISM_CAP: usize = 256;

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
    /// Vertices individualized on the way to the current node.
    path: Vec<usize>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the rest of the tree below `depth` is known
    /// to be an automorphic image of an explored part.
    fn run(&mut self, mut cells: Cells) -> Option<usize> {
        refine(self.adj, &mut cells);
        let depth = self.path.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells.iter().map(|c| c[0]).collect());
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&w| twins(self.adj, v, w)) || self.same_orbit(v, &tried) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&x| x != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.path.push(v);
            let jump = self.run(next);
            self.path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>) -> Option<usize> {
        let code = leaf_code(self.adj, &order);
        let leaf = Leaf { code, order, path: self.path.clone() };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("set with first");
        // An equal code means the map between the two leaf orders is an
        // automorphism fixing their common prefix.
        for reference in [first, best] {
            if reference.code == leaf.code {
                let mut gamma = vec![0; leaf.order.len()];
                for (a, b) in reference.order.iter().zip(&leaf.order) {
                    gamma[*a] = *b;
                }
                let common = reference.path.iter().zip(&leaf.path).take_while(|(a, b)| a == b).count();
                if self.autos.len() < AUTOMORPHISM_CAP {
                    self.autos.push(gamma);
                }
                return Some(common);
            }
        }
        if leaf.code < best.code {
            self.best = Some(leaf);
        }
        None
    }

    /// Whether `v` shares an orbit with a tried vertex under the stored
    /// automorphisms that fix the current path pointwise.
    fn same_orbit(&self, v: usize, tried: &[usize]) -> bool {
        if tried.is_empty() || self.autos.is_empty() {
            return false;
        }
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in self.autos.iter().filter(|g| self.path.iter().all(|&p| g[p] == p)) {
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (root(&mut parent, x), root(&mut parent, y));
                parent[a] = b;
            }
        }
        let rv = root(&mut parent, v);
        tried.iter().any(|&w| root(&mut parent, w) == rv)
    }
}

fn twins(adj: &[u64], v: usize, w: usize) -> bool {
    adj[v] & !(1u64 << w) == adj[w] & !(1u64 << v)
}

/// Equitable refinement: split every cell by the vector of neighbor counts
/// into all cells, until nothing splits. Sub-cells are ordered by signature,
/// which keeps the result label-independent.
fn refine(adj: &[u64], cells: &mut Cells) {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let changed = next.len() != cells.len();
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn leaf_code(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let pairs = n * (n - 1) / 2;
    let mut bits = vec![0u64; pairs.div_ceil(64)];
    let mut pos = 0usize;
    for i in 0..n {
        let row = adj[order[i]];
        for &oj in &order[i + 1..] {
            if row >> oj & 1 == 1 {
                bits[pos / 64] |= 1 << (63 - pos % 64);
            }
            pos += 1;
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, path_graph, star_graph};
    use crate::testutil::brute_force_isomorphic;

    #[test]
    fn spec_examples() {
        let c4 = cycle_graph(4).unwrap();
        let c4b = c4.relabel(|v| [7, 3, 9, 1][v as usize]).unwrap();
        let phi = find_isomorphism(&c4, &c4b).unwrap().unwrap();
        for e in c4.edges() {
            let m = |x| phi.iter().find(|p| p.0 == x).unwrap().1;
            assert!(c4b.has_edge(Edge::new(m(e.u()), m(e.v()))));
        }
        let c6 = cycle_graph(6).unwrap();
        let two_triangles = Graph::from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(find_isomorphism(&c6, &two_triangles).unwrap().is_none());
        assert!(find_isomorphism(&star_graph(3).unwrap(), &path_graph(4).unwrap()).unwrap().is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let c11 = cycle_graph(11).unwrap();
        assert!(matches!(find_isomorphism(&c11, &c11), Err(crate::Error::ResourceLimit(_))));
    }

    #[test]
    fn canonical_graph_round_trips() {
        for g in [cycle_graph(5).unwrap(), complete_bipartite(2, 3).unwrap(), path_graph(4).unwrap()] {
            let c = canonical_graph(&g);
            assert!(brute_force_isomorphic(&g, &c));
            assert_eq!(canonical_form(&c), canonical_form(&g));
        }
    }

    #[test]
    fn forms_agree_with_brute_force_on_all_five_vertex_graphs() {
        let pairs: Vec<(Vertex, Vertex)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let graphs: Vec<Graph> = (0u32..1 << pairs.len())
            .step_by(7)
            .map(|mask| {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p);
                Graph::new(0..5, edges).unwrap()
            })
            .collect();
        for a in &graphs {
            for b in graphs.iter().step_by(3) {
                assert_eq!(canonical_form(a) == canonical_form(b), brute_force_isomorphic(a, b), "{a:?} {b:?}");
            }
        }
    }
}
