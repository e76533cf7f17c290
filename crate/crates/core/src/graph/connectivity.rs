//! Vertex connectivity via Menger's theorem: the minimum over nonadjacent
//! pairs of the maximum number of internally disjoint paths, computed as a
//! unit-capacity max flow on the vertex-split digraph.

use std::collections::VecDeque;

use super::Graph;
use crate::error::{invalid, Result};

/// Size of a minimum vertex cut; `K_n` has connectivity `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return invalid("vertex connectivity needs at least two vertices");
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let adj = index_adjacency(g);
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if adj[s].contains(&t) {
                continue;
            }
            best = best.min(disjoint_paths(&adj, s, t, best));
        }
    }
    Ok(best)
}

/// `g` is `k`-connected: more than `k` vertices and no cut of size below `k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    g.vertex_count() > k && vertex_connectivity(g).is_ok_and(|c| c >= k)
}

fn index_adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let pos = |v| g.vertices().binary_search(&v).expect("endpoint present");
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        let (a, b) = (pos(e.u()), pos(e.v()));
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Maximum number of internally vertex-disjoint s-t paths, stopping early
/// once `stop` paths are found.
fn disjoint_paths(adj: &[Vec<usize>], s: usize, t: usize, stop: usize) -> usize {
    // Node 2v is v_in, 2v+1 is v_out; arc v_in -> v_out has capacity 1
    // except at the terminals.
    let n = adj.len();
    let mut cap = vec![std::collections::HashMap::<usize, i32>::new(); 2 * n];
    let add = |cap: &mut Vec<std::collections::HashMap<usize, i32>>, a: usize, b: usize, c: i32| {
        *cap[a].entry(b).or_insert(0) += c;
        cap[b].entry(a).or_insert(0);
    };
    for v in 0..n {
        let c = if v == s || v == t { n as i32 } else { 1 };
        add(&mut cap, 2 * v, 2 * v + 1, c);
        for &w in &adj[v] {
            add(&mut cap, 2 * v + 1, 2 * w, 1);
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < stop {
        let mut prev = vec![usize::MAX; 2 * n];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            let mut next: Vec<usize> = cap[x].iter().filter(|(_, &c)| c > 0).map(|(&y, _)| y).collect();
            next.sort_unstable();
            for y in next {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            *cap[x].get_mut(&y).unwrap() -= 1;
            *cap[y].get_mut(&x).unwrap() += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}
