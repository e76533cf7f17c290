//! Unions of graph matroid families.
//!
//! Independence in the union is decided by matroid partition: edges are
//! inserted one at a time, and each insertion searches the exchange graph
//! breadth-first for a shortest augmenting path. Only the parts'
//! independence oracles are consulted, with answers memoized per
//! computation.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{invalid, precondition, Result};
use crate::families::DimThreshold;
use crate::graph::{Edge, Graph, Vertex};
use crate::matroid::{Independence, Oracle};

/// Edge sets, one per part, pairwise disjoint, each independent in its part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub parts: Vec<Vec<Edge>>,
}

impl Partition {
    pub fn edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

struct Partitioner<'a> {
    parts: &'a [Oracle],
    sets: Vec<Vec<Edge>>,
    owner: HashMap<Edge, usize>,
    memo: HashMap<(usize, Vec<Edge>), bool>,
}

impl<'a> Partitioner<'a> {
    fn new(parts: &'a [Oracle]) -> Partitioner<'a> {
        Partitioner { parts, sets: vec![Vec::new(); parts.len()], owner: HashMap::new(), memo: HashMap::new() }
    }

    fn independent(&mut self, part: usize, mut set: Vec<Edge>) -> Result<bool> {
        set.sort_unstable();
        if let Some(&v) = self.memo.get(&(part, set.clone())) {
            return Ok(v);
        }
        let v = self.parts[part].independence().is_independent(&set)?;
        self.memo.insert((part, set), v);
        Ok(v)
    }

    /// Adds `s` to the partition if the current edges plus `s` are
    /// partitionable; returns whether it was added.
    fn insert(&mut self, s: Edge) -> Result<bool> {
        let mut prev: HashMap<Edge, Edge> = HashMap::new();
        let mut queue = VecDeque::from([s]);
        prev.insert(s, s);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.parts.len() {
                if self.owner.get(&x) == Some(&i) {
                    continue;
                }
                let mut with = self.sets[i].clone();
                with.push(x);
                if self.independent(i, with)? {
                    self.augment(s, x, i, &prev);
                    return Ok(true);
                }
                for y in self.sets[i].clone() {
                    if prev.contains_key(&y) {
                        continue;
                    }
                    let swapped: Vec<Edge> = self.sets[i].iter().map(|&z| if z == y { x } else { z }).collect();
                    if self.independent(i, swapped)? {
                        prev.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(false)
    }

    /// `end` joins part `last`; every earlier element on the path takes the
    /// place of its successor.
    fn augment(&mut self, s: Edge, end: Edge, last: usize, prev: &HashMap<Edge, Edge>) {
        let mut y = end;
        let mut target = last;
        loop {
            let from = self.owner.get(&y).copied();
            if let Some(f) = from {
                self.sets[f].retain(|&z| z != y);
            }
            self.sets[target].push(y);
            self.sets[target].sort_unstable();
            self.owner.insert(y, target);
            if y == s {
                break;
            }
            target = from.expect("path elements other than the start are owned");
            y = prev[&y];
        }
    }

    fn partition(&self) -> Partition {
        Partition { parts: self.sets.clone() }
    }
}

/// A certifying partition of `E(G)` if it is independent in the union.
pub fn union_independent(parts: &[Oracle], g: &Graph) -> Result<Option<Partition>> {
    partition_edges(parts, g.edges())
}

pub fn partition_edges(parts: &[Oracle], edges: &[Edge]) -> Result<Option<Partition>> {
    if parts.is_empty() {
        return invalid("a union needs at least one part");
    }
    let mut bound = 0;
    for p in parts {
        bound += p.rank_edges(edges)?;
    }
    if edges.len() > bound {
        return Ok(None);
    }
    let mut state = Partitioner::new(parts);
    for &e in edges {
        if !state.insert(e)? {
            return Ok(None);
        }
    }
    Ok(Some(state.partition()))
}

/// Greedy maximum partitionable subset: its size is the union rank.
pub fn union_rank(parts: &[Oracle], edges: &[Edge]) -> Result<(usize, Partition)> {
    if parts.is_empty() {
        return invalid("a union needs at least one part");
    }
    let mut state = Partitioner::new(parts);
    let mut rank = 0;
    for &e in edges {
        if state.insert(e)? {
            rank += 1;
        }
    }
    Ok((rank, state.partition()))
}

pub(crate) struct UnionFamily {
    parts: Vec<Oracle>,
}

impl UnionFamily {
    pub(crate) fn new(parts: Vec<Oracle>) -> UnionFamily {
        UnionFamily { parts }
    }
}

impl Independence for UnionFamily {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        Ok(partition_edges(&self.parts, edges)?.is_some())
    }

    fn basis(&self, edges: &[Edge]) -> Result<Vec<Edge>> {
        Ok(union_rank(&self.parts, edges)?.1.edges())
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        Ok(union_rank(&self.parts, edges)?.0)
    }
}

/// `sum_i max(t_i, 2 d_i)`. A missing profile marks a trivial family.
pub fn union_threshold_bound(profiles: &[Option<DimThreshold>]) -> Result<usize> {
    if profiles.is_empty() {
        return invalid("a union needs at least one part");
    }
    profiles.iter().try_fold(0, |acc, p| match p {
        Some(p) => Ok(acc + p.t.max(2 * p.d)),
        None => invalid("union threshold bound requires nontrivial families"),
    })
}

/// Edge-disjoint spanning subgraphs `G_1, .., G_k` of `K_n` with `G_i`
/// rigid in part `i`. The vertices are split into blocks `V_i = V_i^1 ∪ V_i^2`
/// with `|V_i^2| = d_i` and `|V_i| = max(t_i, 2 d_i)`, leftover vertices going
/// to `V_k^1`; `G_i` is the complete graph on `V_i` plus the edges from
/// `V_i^1` to `V_l^1` and `V_i^2` to `V_l^2` for `l < i`, and from `V_i^1` to
/// `V_l^2` and `V_i^2` to `V_l^1` for `l > i`. Each `G_i` is checked to have
/// the rank of `K_n` in its family.
pub fn construct_rigid_partition(parts: &[(Oracle, DimThreshold)], n: usize) -> Result<Vec<Graph>> {
    let bound = union_threshold_bound(&parts.iter().map(|p| Some(p.1)).collect::<Vec<_>>())?;
    if n < bound {
        return invalid(format!("the construction needs at least {bound} vertices, got {n}"));
    }
    let k = parts.len();
    let mut blocks: Vec<[Vec<Vertex>; 2]> = Vec::with_capacity(k);
    let mut next: Vertex = 0;
    for (i, (_, p)) in parts.iter().enumerate() {
        let mut size = p.t.max(2 * p.d);
        if i == k - 1 {
            size += n - bound;
        }
        let first: Vec<Vertex> = (next..next + (size - p.d) as Vertex).collect();
        next += (size - p.d) as Vertex;
        let second: Vec<Vertex> = (next..next + p.d as Vertex).collect();
        next += p.d as Vertex;
        blocks.push([first, second]);
    }
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let own: Vec<Vertex> = blocks[i].concat();
        let mut edges: Vec<(Vertex, Vertex)> =
            own.iter().enumerate().flat_map(|(a, &x)| own[a + 1..].iter().map(move |&y| (x, y))).collect();
        for l in 0..k {
            if l == i {
                continue;
            }
            let pairs: [(usize, usize); 2] = if l < i { [(0, 0), (1, 1)] } else { [(0, 1), (1, 0)] };
            for (a, b) in pairs {
                for &x in &blocks[i][a] {
                    for &y in &blocks[l][b] {
                        edges.push((x, y));
                    }
                }
            }
        }
        let g = Graph::new(0..n as Vertex, edges)?;
        let oracle = &parts[i].0;
        if oracle.rank_edges(g.edges())? != oracle.rank_complete(n)? {
            return precondition(format!("part {i} is not rigid in {}; is its profile correct?", oracle.name()));
        }
        out.push(g);
    }
    Ok(out)
}
