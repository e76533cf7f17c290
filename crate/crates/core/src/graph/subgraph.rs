//! Subgraph isomorphism (not necessarily induced) by backtracking with
//! degree pruning.

use super::{Graph, Vertex};
use crate::error::{limit, Result};

/// Backtracking node budget before giving up with a resource-limit error.
pub const SEARCH_NODE_CAP: u64 = 50_000_000;

/// Whether `host` contains a subgraph isomorphic to `pattern`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Result<bool> {
    Ok(find_subgraph(host, pattern)?.is_some())
}

/// An injective map from pattern vertices to host vertices carrying pattern
/// edges onto host edges, as `(pattern vertex, host vertex)` pairs.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let (Some(hadj), Some(padj)) = (host.adjacency_masks(), pattern.adjacency_masks()) else {
        return limit("subgraph search supports at most 64 vertices");
    };
    let hdeg: Vec<u32> = hadj.iter().map(|m| m.count_ones()).collect();
    let pdeg: Vec<u32> = padj.iter().map(|m| m.count_ones()).collect();

    // Match high-degree pattern vertices first, preferring ones adjacent to
    // already placed vertices.
    let p = padj.len();
    let mut order: Vec<usize> = Vec::with_capacity(p);
    let mut placed = 0u64;
    while order.len() < p {
        let next = (0..p)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((padj[v] & placed).count_ones(), pdeg[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        order.push(next);
        placed |= 1 << next;
    }

    let mut state = Search {
        hadj: &hadj,
        padj: &padj,
        hdeg: &hdeg,
        pdeg: &pdeg,
        order: &order,
        image: vec![usize::MAX; p],
        used: 0,
        nodes: 0,
    };
    if !state.extend(0)? {
        return Ok(None);
    }
    let mut map: Vec<(Vertex, Vertex)> =
        (0..p).map(|i| (pattern.vertices()[i], host.vertices()[state.image[i]])).collect();
    map.sort_unstable();
    Ok(Some(map))
}

struct Search<'a> {
    hadj: &'a [u64],
    padj: &'a [u64],
    hdeg: &'a [u32],
    pdeg: &'a [u32],
    order: &'a [usize],
    image: Vec<usize>,
    used: u64,
    nodes: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > SEARCH_NODE_CAP {
            return limit("subgraph search exceeded its node budget");
        }
        let v = self.order[depth];
        for h in 0..self.hadj.len() {
            if self.used >> h & 1 == 1 || self.hdeg[h] < self.pdeg[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.padj[v] >> w & 1 == 0 || self.hadj[h] >> self.image[w] & 1 == 1);
            if !consistent {
                continue;
            }
            self.image[v] = h;
            self.used |= 1 << h;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used &= !(1 << h);
            self.image[v] = usize::MAX;
        }
        Ok(false)
    }
}
