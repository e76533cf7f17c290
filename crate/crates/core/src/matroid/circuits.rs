//! Circuit enumeration by increasing size.
//!
//! A subset that contains no smaller circuit has only independent proper
//! subsets, so it is a circuit exactly when it is dependent. Subsets
//! containing an already found circuit are skipped, and no circuit is larger
//! than `r(G) + 1`.

use super::Oracle;
use crate::error::{limit, Result};
use crate::graph::{Edge, Graph};

/// Default bound on circuit size.
pub const CIRCUIT_SIZE_CAP: usize = 12;
/// Maximum number of candidate subsets examined.
pub const CIRCUIT_SUBSET_BUDGET: u128 = 1 << 21;

/// All circuits of `M(G)` with at most `max_size` edges (default
/// [`CIRCUIT_SIZE_CAP`]), ordered by size and then lexicographically by
/// edge positions.
pub fn circuits(oracle: &Oracle, g: &Graph, max_size: Option<usize>) -> Result<Vec<Vec<Edge>>> {
    let edges = g.edges();
    let m = edges.len();
    if m > 64 {
        return limit(format!("circuit search supports at most 64 host edges, got {m}"));
    }
    let rank = oracle.rank_edges(edges)?;
    let top = max_size.unwrap_or(CIRCUIT_SIZE_CAP).min(rank + 1).min(m);
    let work: u128 = (1..=top).map(|s| binomial(m, s)).sum();
    if work > CIRCUIT_SUBSET_BUDGET {
        return limit(format!(
            "circuit search over {m} edges up to size {top} needs {work} subsets, budget is {CIRCUIT_SUBSET_BUDGET}"
        ));
    }
    let mut found: Vec<u64> = Vec::new();
    let mut out = Vec::new();
    for size in 1..=top {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mask = idx.iter().fold(0u64, |acc, &i| acc | 1 << i);
            if !found.iter().any(|&c| c & mask == c) {
                let subset: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
                if !oracle.independence().is_independent(&subset)? {
                    found.push(mask);
                    out.push(subset);
                }
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    Ok(out)
}

/// Dependent, with every single-edge deletion independent.
pub fn is_circuit(oracle: &Oracle, edges: &[Edge]) -> Result<bool> {
    let mut e = edges.to_vec();
    e.sort_unstable();
    e.dedup();
    if e.is_empty() || oracle.independence().is_independent(&e)? {
        return Ok(false);
    }
    for i in 0..e.len() {
        let mut rest = e.clone();
        rest.remove(i);
        if !oracle.independence().is_independent(&rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}
