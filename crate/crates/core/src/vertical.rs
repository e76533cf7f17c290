//! Vertical separations and vertical connectivity of `M(G)`.
//!
//! A bipartition `(E1, E2)` with ranks `r1`, `r2` and total rank `r` is a
//! vertical `k`-separation for exactly the `k` in
//! `max(1, r1 + r2 - r + 1) ..= min(r1, r2)`, so one pass over the
//! bipartitions yields every separation parameter at once. Bipartitions are
//! visited with the smaller side first, by size and then lexicographically.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, limit, precondition, Result};
use crate::families::KnownProfile;
use crate::graph::connectivity::is_k_connected;
use crate::graph::{enumerate_graphs, Edge, Graph};
use crate::matroid::circuits::next_combination;
use crate::matroid::Oracle;
use crate::structure::is_k_redundantly_rigid_strict;

/// Largest host accepted by the exhaustive separation search.
pub const SEPARATION_EDGE_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerticalSeparation {
    pub e1: Vec<Edge>,
    pub e2: Vec<Edge>,
    pub k: usize,
    pub r1: usize,
    pub r2: usize,
    pub r: usize,
}

impl VerticalSeparation {
    /// Computes the ranks and checks that `(e1, e2)` is a vertical
    /// `k`-separation of `M(G)`.
    pub fn new(oracle: &Oracle, g: &Graph, e1: &[Edge], e2: &[Edge], k: usize) -> Result<VerticalSeparation> {
        let (mut e1, mut e2) = (e1.to_vec(), e2.to_vec());
        e1.sort_unstable();
        e2.sort_unstable();
        let mut all: Vec<Edge> = e1.iter().chain(&e2).copied().collect();
        all.sort_unstable();
        if all != g.edges() {
            return invalid("the two sides must partition the edge set of the host");
        }
        let sep = VerticalSeparation {
            r1: oracle.rank_edges(&e1)?,
            r2: oracle.rank_edges(&e2)?,
            r: oracle.rank_edges(g.edges())?,
            e1,
            e2,
            k,
        };
        if !sep.inequalities_hold() {
            return invalid(format!("not a vertical {k}-separation: r1 = {}, r2 = {}, r = {}", sep.r1, sep.r2, sep.r));
        }
        Ok(sep)
    }

    fn inequalities_hold(&self) -> bool {
        self.k >= 1 && self.r1 >= self.k && self.r2 >= self.k && self.r1 + self.r2 + 1 <= self.r + self.k
    }

    /// Re-derives the recorded ranks from the oracle and checks them.
    pub fn certify(&self, oracle: &Oracle, g: &Graph) -> Result<bool> {
        let fresh = match VerticalSeparation::new(oracle, g, &self.e1, &self.e2, self.k) {
            Ok(s) => s,
            Err(crate::Error::InvalidArgument(_)) => return Ok(false),
            Err(e) => return Err(e),
        };
        Ok(fresh == *self)
    }
}

struct Side {
    mask: u32,
    r1: usize,
    r2: usize,
}

fn subset(edges: &[Edge], mask: u32) -> Vec<Edge> {
    edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect()
}

/// Visits bipartitions with `|E1| <= |E2|` in order, one stratum per
/// `|E1|`, strata searched in parallel; `pick` chooses within a stratum and
/// the first stratum with a hit wins.
fn search<T: Send>(
    oracle: &Oracle,
    g: &Graph,
    min_side: usize,
    pick: impl Fn(&Side, usize) -> Option<T> + Sync,
) -> Result<Option<T>> {
    let edges = g.edges();
    let m = edges.len();
    if m > SEPARATION_EDGE_CAP {
        return limit(format!("separation search supports at most {SEPARATION_EDGE_CAP} edges, got {m}"));
    }
    let r = oracle.rank_edges(edges)?;
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let inner = oracle.independence();
    let strata: Vec<usize> = (min_side.max(1)..=m / 2).collect();
    let found = strata
        .par_iter()
        .map(|&size| -> Result<Option<T>> {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let mask = idx.iter().fold(0u32, |acc, &i| acc | 1 << i);
                let r1 = inner.rank(&subset(edges, mask))?;
                let r2 = inner.rank(&subset(edges, full & !mask))?;
                if let Some(hit) = pick(&Side { mask, r1, r2 }, r) {
                    return Ok(Some(hit));
                }
                if !next_combination(&mut idx, m) {
                    return Ok(None);
                }
            }
        })
        .find_map_first(|x| match x {
            Ok(None) => None,
            other => Some(other),
        });
    found.transpose().map(Option::flatten)
}

fn separation_range(r1: usize, r2: usize, r: usize) -> Option<(usize, usize)> {
    let lo = (r1 + r2 + 1).saturating_sub(r).max(1);
    let hi = r1.min(r2);
    (lo <= hi).then_some((lo, hi))
}

fn build(oracle: &Oracle, g: &Graph, mask: u32, k: usize) -> Result<VerticalSeparation> {
    let full: u32 = (1u64 << g.edge_count()).wrapping_sub(1) as u32;
    VerticalSeparation::new(oracle, g, &subset(g.edges(), mask), &subset(g.edges(), full & !mask), k)
}

/// A vertical separation with parameter exactly `k`, if one exists.
pub fn find_vertical_separation(oracle: &Oracle, g: &Graph, k: usize) -> Result<Option<VerticalSeparation>> {
    if k == 0 {
        return invalid("separation parameter must be positive");
    }
    // r(E1) <= |E1|, so sides smaller than k cannot qualify.
    let hit = search(oracle, g, k, |s, r| {
        separation_range(s.r1, s.r2, r).filter(|&(lo, hi)| lo <= k && k <= hi).map(|_| s.mask)
    })?;
    hit.map(|mask| build(oracle, g, mask, k)).transpose()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerticalConnectivity {
    /// The largest `k <= r` with no vertical `k'`-separation for `k' < k`.
    pub value: usize,
    pub rank: usize,
    /// A separation with the smallest parameter, when any exists.
    pub smallest_separation: Option<VerticalSeparation>,
}

/// Vertical connectivity of `M(G)`, together with a separation of smallest
/// parameter.
pub fn vertical_connectivity(oracle: &Oracle, g: &Graph) -> Result<VerticalConnectivity> {
    let r = oracle.rank_edges(g.edges())?;
    if r == 0 {
        return invalid("vertical connectivity is undefined for rank zero");
    }
    let edges = g.edges();
    let m = edges.len();
    if m > SEPARATION_EDGE_CAP {
        return limit(format!("separation search supports at most {SEPARATION_EDGE_CAP} edges, got {m}"));
    }
    // Minimum of the lower ends over all bipartitions; strata cannot be cut
    // short, so collect the best per stratum.
    let inner = oracle.independence();
    let full: u32 = (1u64 << m).wrapping_sub(1) as u32;
    let per_stratum: Vec<Option<(usize, u32)>> = (1..=m / 2)
        .into_par_iter()
        .map(|size| -> Result<Option<(usize, u32)>> {
            let mut best: Option<(usize, u32)> = None;
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let mask = idx.iter().fold(0u32, |acc, &i| acc | 1 << i);
                let r1 = inner.rank(&subset(edges, mask))?;
                let r2 = inner.rank(&subset(edges, full & !mask))?;
                if let Some((lo, _)) = separation_range(r1, r2, r) {
                    if best.is_none_or(|b| lo < b.0) {
                        best = Some((lo, mask));
                        if lo == 1 {
                            break;
                        }
                    }
                }
                if !next_combination(&mut idx, m) {
                    break;
                }
            }
            Ok(best)
        })
        .collect::<Result<_>>()?;
    let best = per_stratum.into_iter().flatten().min_by_key(|b| b.0);
    let smallest_separation = best.map(|(k, mask)| build(oracle, g, mask, k)).transpose()?;
    let value = best.map_or(r, |b| b.0.min(r));
    Ok(VerticalConnectivity { value, rank: r, smallest_separation })
}

/// Whether `M(G)` is vertically `k`-connected; stops at the first
/// separation with parameter below `k`.
pub fn is_vertically_k_connected(oracle: &Oracle, g: &Graph, k: usize) -> Result<bool> {
    let r = oracle.rank_edges(g.edges())?;
    if k > r {
        return Ok(false);
    }
    if k <= 1 {
        return Ok(r >= 1);
    }
    let hit = search(oracle, g, 1, |s, r| separation_range(s.r1, s.r2, r).filter(|&(lo, _)| lo < k).map(|_| ()))?;
    Ok(hit.is_none())
}

/// Turns a cover `E = E1 ∪ E2` satisfying the separation inequalities for
/// `k` into the bipartition `(E1, E2 - E1)`, a vertical separation with
/// parameter `k - (r(E2) - r(E2 - E1))`.
pub fn relaxed_separation_to_strict(
    oracle: &Oracle,
    g: &Graph,
    e1: &[Edge],
    e2: &[Edge],
    k: usize,
) -> Result<VerticalSeparation> {
    if k == 0 {
        return invalid("separation parameter must be positive");
    }
    let mut cover: Vec<Edge> = e1.iter().chain(e2).copied().collect();
    cover.sort_unstable();
    cover.dedup();
    if cover != g.edges() {
        return invalid("the two sets must cover exactly the edge set of the host");
    }
    let (r1, r2, r) = (oracle.rank_edges(e1)?, oracle.rank_edges(e2)?, oracle.rank_edges(g.edges())?);
    if r1 < k || r2 < k || r1 + r2 + 1 > r + k {
        return invalid(format!("the cover does not satisfy the inequalities for k = {k}"));
    }
    let rest: Vec<Edge> = e2.iter().copied().filter(|e| !e1.contains(e)).collect();
    if rest.is_empty() {
        return invalid("E2 - E1 is empty, so the result would not be a bipartition");
    }
    let drop = r2 - oracle.rank_edges(&rest)?;
    VerticalSeparation::new(oracle, g, e1, &rest, k - drop)
}

/// Whether vertical `k`-connectivity of `M(G)` implies minimum degree at
/// least `k + d - 1` on this host. `d` comes from the documented profile.
pub fn check_min_degree_bound(oracle: &Oracle, g: &Graph, k: usize) -> Result<bool> {
    if k < 2 {
        return invalid("the degree bound is stated for k >= 2");
    }
    let d = match oracle.spec().and_then(|s| s.documented_profile()) {
        Some(KnownProfile::Unbounded { d, .. }) => d,
        _ => return precondition(format!("{} has no documented unbounded profile", oracle.name())),
    };
    if !is_vertically_k_connected(oracle, g, k)? {
        return Ok(true);
    }
    Ok(g.min_degree().unwrap_or(0) + 1 >= k + d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub family: String,
    pub hosts_checked: usize,
    /// Hosts on which the hypothesis held.
    pub premises_met: usize,
    pub counterexample: Option<Graph>,
}

fn harness(
    oracle: &Oracle,
    n_max: usize,
    premise: impl Fn(&Graph) -> Result<bool> + Sync,
    conclusion: impl Fn(&Graph) -> Result<bool> + Sync,
) -> Result<HarnessReport> {
    let hosts = enumerate_graphs(n_max, |h| h.edge_count() <= SEPARATION_EDGE_CAP)?;
    let verdicts: Vec<(bool, bool)> = hosts
        .par_iter()
        .map(|h| -> Result<(bool, bool)> {
            if !premise(h)? {
                return Ok((false, true));
            }
            Ok((true, conclusion(h)?))
        })
        .collect::<Result<_>>()?;
    Ok(HarnessReport {
        family: oracle.name().to_string(),
        hosts_checked: hosts.len(),
        premises_met: verdicts.iter().filter(|v| v.0).count(),
        counterexample: verdicts.iter().position(|v| !v.1).map(|i| hosts[i].clone()),
    })
}

fn documented(oracle: &Oracle) -> Result<(usize, usize)> {
    match oracle.spec().and_then(|s| s.documented_profile()) {
        Some(KnownProfile::Unbounded { d, t }) => Ok((d, t)),
        _ => precondition(format!("{} has no documented unbounded profile", oracle.name())),
    }
}

/// Searches connected hosts on at most `n_max` vertices for one whose matroid
/// is vertically `(r(K_k) + 2)`-connected, for `k = t`, without the graph
/// being `(k + 1)`-connected.
pub fn vertical_to_vertex_connectivity_harness(oracle: &Oracle, n_max: usize) -> Result<HarnessReport> {
    let (_, t) = documented(oracle)?;
    let need = oracle.rank_complete(t)? + 2;
    harness(
        oracle,
        n_max,
        |h| {
            if !h.is_connected() || oracle.rank_edges(h.edges())? < need {
                return Ok(false);
            }
            is_vertically_k_connected(oracle, h, need)
        },
        |h| Ok(is_k_connected(h, t + 1)),
    )
}

/// Searches for a `k`-connected, `k`-redundantly rigid host (in the strict
/// sense of [`is_k_redundantly_rigid_strict`]) with at least
/// `k + t` vertices whose matroid is not vertically `(k + 1)`-connected.
pub fn redundant_rigidity_to_vertical_harness(oracle: &Oracle, k: usize, n_max: usize) -> Result<HarnessReport> {
    let (_, t) = documented(oracle)?;
    harness(
        oracle,
        n_max,
        |h| {
            Ok(h.vertex_count() >= k + t
                && h.vertex_count() >= k + 2
                && is_k_connected(h, k)
                && is_k_redundantly_rigid_strict(oracle, h, k)?)
        },
        |h| is_vertically_k_connected(oracle, h, k + 1),
    )
}

/// For a family in which every `c`-connected graph is rigid: searches for a
/// `(max(t, c) + k)`-connected host whose matroid is not vertically
/// `(k + 1)`-connected.
pub fn connectivity_to_vertical_harness(oracle: &Oracle, c: usize, k: usize, n_max: usize) -> Result<HarnessReport> {
    let (_, t) = documented(oracle)?;
    let need = t.max(c) + k;
    harness(oracle, n_max, |h| Ok(is_k_connected(h, need)), |h| is_vertically_k_connected(oracle, h, k + 1))
}
