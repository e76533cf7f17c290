//! Uniform-like families `U_X`: `G` is independent iff `|E(G)| <= k` and `G`
//! is not isomorphic to a member of `X`, where every member of `X` has `k`
//! edges and `X` is union-stable.

use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::graph::canon::{canonical_form, CanonicalForm};
use crate::graph::{Edge, Graph, Vertex};
use crate::matroid::Independence;

/// Union-stability: for any two distinct overlapping placements `G`, `H` of
/// members of `X` and any shared edge `e`, either `(G ∪ H) - e` has at least
/// `k + 1` edges or it is isomorphic to a member of `X`.
///
/// Placements are enumerated by mapping the vertices of `H` injectively into
/// `V(G)` plus fresh vertices. Identical placements (`E(G) = E(H)`) are
/// skipped, since `G - e` never has `k` edges.
pub fn union_stable_check(x: &[Graph], k: usize) -> Result<bool> {
    if let Some(g) = x.iter().find(|g| g.edge_count() != k) {
        return invalid(format!("member {g} has {} edges, expected {k}", g.edge_count()));
    }
    let members: BTreeSet<CanonicalForm> = x.iter().map(|g| canonical_form(&g.drop_isolated())).collect();
    let reps: Vec<Graph> = members.iter().map(|f| f.to_graph()).collect();
    for g in &reps {
        for h in &reps {
            if !pair_is_stable(g, h, k, &members) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn pair_is_stable(g: &Graph, h: &Graph, k: usize, members: &BTreeSet<CanonicalForm>) -> bool {
    let hv = h.vertices().to_vec();
    let gv = g.vertices().to_vec();
    let fresh_base = g.fresh_label();
    let mut image: Vec<Option<Vertex>> = vec![None; hv.len()];
    let mut ok = true;
    place(&hv, &gv, fresh_base, 0, 0, &mut image, &mut |img| {
        let map = |v: Vertex| img[hv.iter().position(|&x| x == v).expect("vertex of h")].expect("placed");
        let placed: BTreeSet<Edge> = h.edges().iter().map(|e| e.map(map)).collect();
        let shared: Vec<Edge> = g.edges().iter().copied().filter(|e| placed.contains(e)).collect();
        if shared.is_empty() || placed.len() == g.edge_count() && shared.len() == placed.len() {
            return true;
        }
        let union: BTreeSet<Edge> = g.edges().iter().copied().chain(placed).collect();
        if union.len() >= k + 2 {
            return true;
        }
        for e in shared {
            let rest = Graph::from_edge_set(union.iter().copied().filter(|&f| f != e));
            if !members.contains(&canonical_form(&rest)) {
                ok = false;
                return false;
            }
        }
        true
    });
    ok
}

/// Enumerates injective maps from `hv` into `gv` plus fresh labels. Fresh
/// labels are used in increasing order, which avoids symmetric repeats.
fn place(
    hv: &[Vertex],
    gv: &[Vertex],
    fresh_base: Vertex,
    depth: usize,
    fresh_used: Vertex,
    image: &mut Vec<Option<Vertex>>,
    visit: &mut dyn FnMut(&[Option<Vertex>]) -> bool,
) -> bool {
    if depth == hv.len() {
        return visit(image);
    }
    for &target in gv {
        if image[..depth].contains(&Some(target)) {
            continue;
        }
        image[depth] = Some(target);
        if !place(hv, gv, fresh_base, depth + 1, fresh_used, image, visit) {
            return false;
        }
    }
    image[depth] = Some(fresh_base + fresh_used);
    let cont = place(hv, gv, fresh_base, depth + 1, fresh_used + 1, image, visit);
    image[depth] = None;
    cont
}

pub(crate) struct UnionStable {
    members: BTreeSet<CanonicalForm>,
    k: usize,
}

impl UnionStable {
    pub(crate) fn new(x: &[Graph], k: usize) -> UnionStable {
        UnionStable { members: x.iter().map(|g| canonical_form(&g.drop_isolated())).collect(), k }
    }
}

impl Independence for UnionStable {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        if edges.len() > self.k {
            return Ok(false);
        }
        if edges.len() < self.k {
            return Ok(true);
        }
        let g = Graph::from_edge_set(edges.iter().copied());
        Ok(!self.members.contains(&canonical_form(&g)))
    }
}

/// Membership test with the stability precondition enforced.
pub fn union_stable_independent(edges: &[Edge], x: &[Graph], k: usize) -> Result<bool> {
    if !union_stable_check(x, k)? {
        return invalid("the graph set is not union-stable");
    }
    UnionStable::new(x, k).is_independent(edges)
}
