//! Generic `d`-dimensional rigidity matroids, evaluated as the row matroid of
//! a rigidity matrix with random coordinates in the prime field `F_p`,
//! `p = 2^31 - 1`.
//!
//! Coordinates are derived from the family seed and the canonical form of
//! the graph spanned by the queried edges, with vertices placed in canonical
//! order. Isomorphic queries therefore see the same matrix up to a row and
//! column permutation, and repeated queries always agree. Full row rank in
//! any trial certifies independence; a dependent verdict is wrong only if
//! every trial hit a degenerate point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{limit, Result};
use crate::graph::canon::canonical_labeling;
use crate::graph::{Edge, Graph};
use crate::matroid::Independence;

pub const RIGIDITY_PRIME: u64 = 2_147_483_647;

pub(crate) struct Rigidity {
    pub(crate) d: u32,
    pub(crate) trials: u32,
    pub(crate) seed: u64,
}

/// Rank of `K_n` in the generic `d`-dimensional rigidity matroid.
pub fn complete_rank(n: usize, d: usize) -> usize {
    if n <= d + 1 {
        n * n.saturating_sub(1) / 2
    } else {
        d * n - d * (d + 1) / 2
    }
}

pub fn rigidity_independent(edges: &[Edge], d: u32, trials: u32, seed: u64) -> Result<bool> {
    Rigidity { d, trials, seed }.is_independent(edges)
}

impl Independence for Rigidity {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        let n = vertex_count(edges);
        if edges.len() > complete_rank(n, self.d as usize) {
            return Ok(false);
        }
        Ok(self.matrix_rank(edges)? == edges.len())
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        self.matrix_rank(edges)
    }
}

fn vertex_count(edges: &[Edge]) -> usize {
    let mut vs: Vec<u32> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs.len()
}

impl Rigidity {
    /// Largest rank over the trials.
    fn matrix_rank(&self, edges: &[Edge]) -> Result<usize> {
        if edges.is_empty() {
            return Ok(0);
        }
        let g = Graph::from_edge_set(edges.iter().copied());
        if g.vertex_count() > 64 {
            return limit("the rigidity oracle supports at most 64 vertices");
        }
        let (form, order) = canonical_labeling(&g);
        let n = order.len();
        let d = self.d as usize;
        // Position of each original vertex in canonical order.
        let position = |v: u32| order.iter().position(|&x| x == v).expect("vertex placed");
        let rows: Vec<(usize, usize)> = g.edges().iter().map(|e| (position(e.u()), position(e.v()))).collect();
        let target = edges.len().min(complete_rank(n, d));
        let mut best = 0;
        for trial in 0..self.trials {
            let mut key = splitmix(self.seed ^ splitmix(form.n as u64));
            for &w in &form.bits {
                key = splitmix(key ^ w);
            }
            key = splitmix(key ^ u64::from(trial));
            let mut rng = ChaCha8Rng::seed_from_u64(key);
            let coords: Vec<u64> = (0..n * d).map(|_| rng.gen_range(0..RIGIDITY_PRIME)).collect();
            let mut matrix: Vec<Vec<u64>> = rows
                .iter()
                .map(|&(a, b)| {
                    let mut row = vec![0u64; n * d];
                    for c in 0..d {
                        let diff = sub(coords[a * d + c], coords[b * d + c]);
                        row[a * d + c] = diff;
                        row[b * d + c] = sub(0, diff);
                    }
                    row
                })
                .collect();
            best = best.max(rank_mod_p(&mut matrix));
            if best == target {
                break;
            }
        }
        Ok(best)
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn sub(a: u64, b: u64) -> u64 {
    (a + RIGIDITY_PRIME - b) % RIGIDITY_PRIME
}

fn mul(a: u64, b: u64) -> u64 {
    a * b % RIGIDITY_PRIME
}

fn inverse(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, RIGIDITY_PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

/// Row rank over `F_p` by Gaussian elimination; destroys the input.
pub(crate) fn rank_mod_p(m: &mut [Vec<u64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inverse(m[rank][c]);
        for x in m[rank][c..].iter_mut() {
            *x = mul(*x, inv);
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let factor = m[r][c];
                for j in c..cols {
                    let t = mul(factor, m[rank][j]);
                    m[r][j] = sub(m[r][j], t);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
