//! Checkers for the matroid axioms on `K_n` and for the family axioms
//! (relabeling invariance and compatibility with restriction).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Oracle;
use crate::error::{limit, Result};
use crate::graph::{complete_graph, Edge, Graph, Vertex};

pub const AXIOM_VERTEX_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AxiomViolation {
    EmptySetDependent,
    /// `set` is independent but `subset` is not.
    Hereditary {
        set: Vec<Edge>,
        subset: Vec<Edge>,
    },
    /// `larger` has one more edge than `smaller`, both independent, and no
    /// edge of `larger` extends `smaller`.
    Exchange {
        smaller: Vec<Edge>,
        larger: Vec<Edge>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub n: usize,
    pub independent_sets: usize,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustive check over all edge subsets of `K_n`. Exchange is checked
/// before heredity so that a non-matroid reports the augmentation failure.
pub fn verify_matroid_axioms(oracle: &Oracle, n: usize) -> Result<AxiomReport> {
    if n > AXIOM_VERTEX_CAP {
        return limit(format!("axiom check is capped at {AXIOM_VERTEX_CAP} vertices, got {n}"));
    }
    let edges: Vec<Edge> = if n == 0 { Vec::new() } else { complete_graph(n)?.edges().to_vec() };
    let m = edges.len();
    let subset = |mask: u32| -> Vec<Edge> { (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect() };
    let mut independent = vec![false; 1 << m];
    for mask in 0u32..1 << m {
        independent[mask as usize] = oracle.is_independent_edges(&subset(mask))?;
    }
    let count = independent.iter().filter(|&&b| b).count();
    let report = |violation| Ok(AxiomReport { n, independent_sets: count, violation });

    if !independent[0] {
        return report(Some(AxiomViolation::EmptySetDependent));
    }
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    for mask in 0u32..1 << m {
        if independent[mask as usize] {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    for s in 0..m {
        for &small in &by_size[s] {
            for &large in &by_size[s + 1] {
                let extra = large & !small;
                let ok = (0..m).any(|i| extra >> i & 1 == 1 && independent[(small | 1 << i) as usize]);
                if !ok {
                    return report(Some(AxiomViolation::Exchange { smaller: subset(small), larger: subset(large) }));
                }
            }
        }
    }
    for mask in 0u32..1 << m {
        if !independent[mask as usize] {
            continue;
        }
        for i in 0..m {
            let sub = mask & !(1 << i);
            if mask >> i & 1 == 1 && !independent[sub as usize] {
                return report(Some(AxiomViolation::Hereditary { set: subset(mask), subset: subset(sub) }));
            }
        }
    }
    report(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilyViolation {
    /// Relabeling the graph changed its verdict.
    Invariance { graph: Graph, relabeled: Graph },
    /// The rank of an edge set differs between a host and the subgraph it spans.
    Compatibility { host: Graph, subset: Vec<Edge>, host_rank: usize, own_rank: usize },
    /// An independent graph has a dependent subgraph.
    Hereditary { graph: Graph, subgraph: Graph },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyAxiomReport {
    pub trials: usize,
    pub n: usize,
    pub seed: u64,
    pub violations: Vec<FamilyViolation>,
}

impl FamilyAxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Randomized checks. Each trial draws a random graph on `n` vertices,
/// compares its verdict with that of a randomly relabeled copy (labels drawn
/// from `0..3n`), embeds it in a random larger host with shifted labels and
/// compares ranks of the original edges, and tests a random subgraph of it
/// when it is independent. Stops recording after the first few violations.
pub fn verify_family_axioms(oracle: &Oracle, trials: usize, n: usize, seed: u64) -> Result<FamilyAxiomReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let pairs: Vec<(Vertex, Vertex)> =
        (0..n as Vertex).flat_map(|a| (a + 1..n as Vertex).map(move |b| (a, b))).collect();
    for _ in 0..trials {
        if violations.len() >= 5 {
            break;
        }
        let density: f64 = rng.gen_range(0.1..0.9);
        let edges: Vec<(Vertex, Vertex)> = pairs.iter().copied().filter(|_| rng.gen_bool(density)).collect();
        let g = Graph::from_edges(edges)?;

        let mut labels: Vec<Vertex> = (0..3 * n.max(1) as Vertex).collect();
        labels.shuffle(&mut rng);
        let relabeled = g.relabel(|v| labels[v as usize])?;
        let verdict = oracle.is_independent(&g)?;
        if verdict != oracle.is_independent(&relabeled)? {
            violations.push(FamilyViolation::Invariance { graph: g.clone(), relabeled });
            continue;
        }

        let shift = rng.gen_range(0..4);
        let moved = g.relabel(|v| v + shift)?;
        let mut host = moved.clone();
        let extra_vertices = rng.gen_range(0..3) as Vertex;
        let top = n as Vertex + shift + extra_vertices;
        for a in 0..top {
            for b in a + 1..top {
                if rng.gen_bool(0.3) {
                    host = host.with_edge(Edge::new(a, b));
                }
            }
        }
        let own_rank = oracle.rank_edges(moved.edges())?;
        let host_rank = super::rank_subset(oracle, &host, moved.edges())?;
        let original_rank = oracle.rank_edges(g.edges())?;
        if own_rank != host_rank || own_rank != original_rank {
            violations.push(FamilyViolation::Compatibility {
                host,
                subset: moved.edges().to_vec(),
                host_rank,
                own_rank: original_rank,
            });
            continue;
        }

        if verdict && g.edge_count() > 0 {
            let keep: Vec<Edge> = g.edges().iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if !oracle.is_independent_edges(&keep)? {
                violations.push(FamilyViolation::Hereditary { graph: g, subgraph: Graph::from_edge_set(keep) });
            }
        }
    }
    Ok(FamilyAxiomReport { trials, n, seed, violations })
}
