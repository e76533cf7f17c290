//! Count matroids `M_{k,l}`: `G` is independent iff `i(X) <= k|X| - l` for
//! every vertex set `X` with `|X| >= 2`.
//!
//! For `0 <= l <= 2k-1` independence is decided by the `(k,l)` pebble game,
//! which also yields the greedy basis in one pass. For `l < 0` the
//! inequality is checked on every vertex subset.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{invalid, limit, Result};
use crate::graph::{Edge, Vertex};
use crate::matroid::Independence;

/// Vertex cap for the exhaustive check used when `l < 0`.
pub const EXHAUSTIVE_VERTEX_CAP: usize = 12;

/// Pebble game state: every vertex starts with `k` pebbles, and each accepted
/// edge is covered by one pebble of the vertex it points out of. Pebbles plus
/// accepted edges always total `k|V|`.
#[derive(Clone, Debug, Serialize)]
pub struct PebbleState {
    k: u32,
    l: u32,
    #[serde(skip)]
    index: HashMap<Vertex, usize>,
    vertices: Vec<Vertex>,
    pebbles: Vec<u32>,
    /// `out[v]` lists heads of edges covered by a pebble of `v`.
    out: Vec<Vec<usize>>,
    accepted: Vec<Edge>,
}

impl PebbleState {
    pub fn new(k: u32, l: u32) -> Result<PebbleState> {
        if k < 1 || l >= 2 * k {
            return invalid(format!("pebble game needs k >= 1 and 0 <= l <= 2k-1, got k={k}, l={l}"));
        }
        Ok(PebbleState {
            k,
            l,
            index: HashMap::new(),
            vertices: Vec::new(),
            pebbles: Vec::new(),
            out: Vec::new(),
            accepted: Vec::new(),
        })
    }

    fn vertex(&mut self, v: Vertex) -> usize {
        if let Some(&i) = self.index.get(&v) {
            return i;
        }
        let i = self.vertices.len();
        self.index.insert(v, i);
        self.vertices.push(v);
        self.pebbles.push(self.k);
        self.out.push(Vec::new());
        i
    }

    /// Tries to add `e`; returns whether it was accepted, i.e. whether the
    /// accepted set plus `e` is still `(k,l)`-sparse.
    pub fn try_insert(&mut self, e: Edge) -> bool {
        let u = self.vertex(e.u());
        let v = self.vertex(e.v());
        while self.pebbles[u] + self.pebbles[v] < self.l + 1 {
            if !self.gather(u, v) && !self.gather(v, u) {
                return false;
            }
        }
        let from = if self.pebbles[u] > 0 { u } else { v };
        let to = if from == u { v } else { u };
        self.pebbles[from] -= 1;
        self.out[from].push(to);
        self.accepted.push(e);
        true
    }

    /// Moves one pebble to `target` along a directed path, never taking one
    /// from `keep`. Returns false when no reachable vertex has a spare pebble.
    fn gather(&mut self, target: usize, keep: usize) -> bool {
        let n = self.vertices.len();
        let mut prev = vec![usize::MAX; n];
        prev[target] = target;
        let mut stack = vec![target];
        let mut found = None;
        while let Some(x) = stack.pop() {
            if x != target && x != keep && self.pebbles[x] > 0 {
                found = Some(x);
                break;
            }
            for &y in &self.out[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    stack.push(y);
                }
            }
        }
        let Some(mut y) = found else {
            return false;
        };
        self.pebbles[y] -= 1;
        self.pebbles[target] += 1;
        while y != target {
            let x = prev[y];
            let pos = self.out[x].iter().position(|&z| z == y).expect("path edge present");
            self.out[x].swap_remove(pos);
            self.out[y].push(x);
            y = x;
        }
        true
    }

    pub fn accepted(&self) -> &[Edge] {
        &self.accepted
    }

    pub fn total_pebbles(&self) -> u32 {
        self.pebbles.iter().sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn pebbles_at(&self, v: Vertex) -> Option<u32> {
        self.index.get(&v).map(|&i| self.pebbles[i])
    }
}

pub(crate) struct Count {
    k: u32,
    l: i32,
}

impl Count {
    pub(crate) fn new(k: u32, l: i32) -> Result<Count> {
        if k < 1 || l > 2 * k as i32 - 1 {
            return invalid(format!("count family needs k >= 1 and l <= 2k-1, got k={k}, l={l}"));
        }
        Ok(Count { k, l })
    }
}

impl Independence for Count {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        count_independent(edges, self.k, self.l)
    }

    fn basis(&self, edges: &[Edge]) -> Result<Vec<Edge>> {
        if self.l < 0 {
            let mut basis: Vec<Edge> = Vec::new();
            for &e in edges {
                basis.push(e);
                if !sparse_by_subsets(&basis, self.k, self.l)? {
                    basis.pop();
                }
            }
            return Ok(basis);
        }
        let mut game = PebbleState::new(self.k, self.l as u32)?;
        for &e in edges {
            game.try_insert(e);
        }
        Ok(game.accepted.clone())
    }
}

/// `(k,l)`-sparsity of the graph spanned by `edges`.
pub fn count_independent(edges: &[Edge], k: u32, l: i32) -> Result<bool> {
    if k < 1 || l > 2 * k as i32 - 1 {
        return invalid(format!("count family needs k >= 1 and l <= 2k-1, got k={k}, l={l}"));
    }
    if l < 0 {
        return sparse_by_subsets(edges, k, l);
    }
    let mut game = PebbleState::new(k, l as u32)?;
    Ok(edges.iter().all(|&e| game.try_insert(e)))
}

/// Direct check of `i(X) <= k|X| - l` over all vertex subsets with `|X| >= 2`.
pub(crate) fn sparse_by_subsets(edges: &[Edge], k: u32, l: i32) -> Result<bool> {
    let mut vs: Vec<Vertex> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
    vs.sort_unstable();
    vs.dedup();
    let n = vs.len();
    if n > EXHAUSTIVE_VERTEX_CAP {
        return limit(format!("exhaustive sparsity check is capped at {EXHAUSTIVE_VERTEX_CAP} vertices, got {n}"));
    }
    let pos = |v| vs.binary_search(&v).expect("endpoint indexed");
    let masks: Vec<u32> = edges.iter().map(|e| 1 << pos(e.u()) | 1 << pos(e.v())).collect();
    for x in 0u32..1 << n {
        let size = x.count_ones() as i64;
        if size < 2 {
            continue;
        }
        let induced = masks.iter().filter(|&&m| m & x == m).count() as i64;
        if induced > k as i64 * size - l as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, enumerate_graphs};

    #[test]
    fn examples() {
        let k4 = complete_graph(4).unwrap();
        assert!(!count_independent(k4.edges(), 2, 3).unwrap());
        let k4e: Vec<Edge> = k4.edges()[1..].to_vec();
        assert!(count_independent(&k4e, 2, 3).unwrap());
        assert!(count_independent(&[], 2, 3).unwrap());
        assert!(count_independent(k4.edges(), 0, 0).is_err());
        assert!(count_independent(k4.edges(), 2, 4).is_err());
    }

    #[test]
    fn pebble_game_matches_subset_check() {
        for g in enumerate_graphs(6, |_| true).unwrap() {
            for (k, l) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3), (3, 5), (3, 3)] {
                let pebble = count_independent(g.edges(), k, l).unwrap();
                let subsets = sparse_by_subsets(g.edges(), k, l).unwrap();
                assert_eq!(pebble, subsets, "k={k} l={l} {g:?}");
            }
            assert_eq!(count_independent(g.edges(), 1, 1).unwrap(), crate::families::graphic_independent(g.edges()));
        }
    }

    #[test]
    fn pebble_invariant_holds() {
        let k6 = complete_graph(6).unwrap();
        for (k, l) in [(1, 1), (2, 3), (2, 0), (3, 5)] {
            let mut game = PebbleState::new(k, l).unwrap();
            for &e in k6.edges() {
                game.try_insert(e);
                let total = game.total_pebbles() as usize + game.accepted().len();
                assert_eq!(total, k as usize * game.vertex_count());
            }
        }
    }

    #[test]
    fn negative_l_is_capped() {
        let k13 = complete_graph(13).unwrap();
        assert!(matches!(count_independent(k13.edges(), 1, -1), Err(crate::Error::ResourceLimit(_))));
        assert!(count_independent(complete_graph(3).unwrap().edges(), 1, -1).unwrap());
        assert!(!count_independent(complete_graph(4).unwrap().edges(), 1, -1).unwrap());
    }
}
