//! Graph matroid families as independence oracles, and the operations derived
//! from independence alone: rank, circuits, bridges, closure and rigidity.
//!
//! An oracle answers whether an edge set is independent. Because a family
//! assigns compatible matroids to all graphs, the verdict for `E0 ⊆ E(G)`
//! depends only on `E0` itself, so the oracle interface takes bare edge sets.

pub mod axioms;
pub mod circuits;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::families::FamilySpec;
use crate::graph::{complete_graph, Edge, Graph};

pub use axioms::{verify_family_axioms, verify_matroid_axioms, AxiomReport, AxiomViolation, FamilyAxiomReport};
pub use circuits::{circuits, is_circuit, CIRCUIT_SIZE_CAP, CIRCUIT_SUBSET_BUDGET};

/// An independence predicate on finite edge sets. Callers pass edges sorted
/// and without repetition.
pub trait Independence: Send + Sync {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool>;

    /// Greedy basis in the given edge order.
    fn basis(&self, edges: &[Edge]) -> Result<Vec<Edge>> {
        let mut basis: Vec<Edge> = Vec::new();
        for &e in edges {
            basis.push(e);
            let mut sorted = basis.clone();
            sorted.sort_unstable();
            if !self.is_independent(&sorted)? {
                basis.pop();
            }
        }
        Ok(basis)
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        Ok(self.basis(edges)?.len())
    }
}

/// A family together with its declarative description. Cheap to clone and
/// safe to share across threads.
#[derive(Clone)]
pub struct Oracle {
    spec: Option<FamilySpec>,
    name: String,
    seed: u64,
    inner: Arc<dyn Independence>,
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Oracle({})", self.name)
    }
}

impl Oracle {
    pub fn from_spec(spec: &FamilySpec) -> Result<Oracle> {
        let inner = crate::families::build(spec)?;
        Ok(Oracle { spec: Some(spec.clone()), name: spec.to_string(), seed: spec.seed(), inner })
    }

    /// Wraps an arbitrary independence implementation.
    pub fn from_independence(name: impl Into<String>, inner: impl Independence + 'static) -> Oracle {
        Oracle { spec: None, name: name.into(), seed: 0, inner: Arc::new(inner) }
    }

    /// An oracle from a predicate on the graph spanned by an edge set. Meant
    /// for experiments and for testing the axiom checkers.
    pub fn from_predicate(
        name: impl Into<String>,
        predicate: impl Fn(&Graph) -> bool + Send + Sync + 'static,
    ) -> Oracle {
        Oracle::from_independence(name, Predicate(predicate))
    }

    pub fn spec(&self) -> Option<&FamilySpec> {
        self.spec.as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn independence(&self) -> &Arc<dyn Independence> {
        &self.inner
    }

    pub fn is_independent_edges(&self, edges: &[Edge]) -> Result<bool> {
        self.inner.is_independent(&normalized(edges))
    }

    pub fn is_independent(&self, g: &Graph) -> Result<bool> {
        self.inner.is_independent(g.edges())
    }

    pub fn rank_edges(&self, edges: &[Edge]) -> Result<usize> {
        self.inner.rank(&normalized(edges))
    }

    pub fn basis_edges(&self, edges: &[Edge]) -> Result<Vec<Edge>> {
        self.inner.basis(&normalized(edges))
    }

    /// Rank of `K_n`.
    pub fn rank_complete(&self, n: usize) -> Result<usize> {
        if n == 0 {
            return Ok(0);
        }
        Ok(self.inner.rank(complete_graph(n)?.edges())?)
    }
}

struct Predicate<F>(F);

impl<F: Fn(&Graph) -> bool + Send + Sync> Independence for Predicate<F> {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        Ok((self.0)(&Graph::from_edge_set(edges.iter().copied())))
    }
}

fn normalized(edges: &[Edge]) -> Vec<Edge> {
    let mut v = edges.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    /// Greedy basis for the lexicographic edge order; other orders may give
    /// other bases of the same size.
    pub basis: Vec<Edge>,
}

pub fn rank(oracle: &Oracle, g: &Graph) -> Result<RankReport> {
    let basis = oracle.inner.basis(g.edges())?;
    Ok(RankReport { rank: basis.len(), basis })
}

fn check_subset(g: &Graph, e0: &[Edge]) -> Result<()> {
    match e0.iter().find(|e| !g.has_edge(**e)) {
        Some(e) => invalid(format!("edge {e} is not in the host graph")),
        None => Ok(()),
    }
}

/// `r(E0)`, which by compatibility does not depend on the host.
pub fn rank_subset(oracle: &Oracle, g: &Graph, e0: &[Edge]) -> Result<usize> {
    check_subset(g, e0)?;
    oracle.rank_edges(e0)
}

/// `r(G) = r(K_{V(G)})`.
pub fn is_rigid(oracle: &Oracle, g: &Graph) -> Result<bool> {
    if g.has_isolated_vertices() {
        return invalid("rigidity is only defined for graphs without isolated vertices");
    }
    Ok(oracle.rank_edges(g.edges())? == oracle.rank_complete(g.vertex_count())?)
}

/// Rigidity with isolated vertices dropped first; the empty graph counts as
/// rigid.
pub fn is_rigid_lenient(oracle: &Oracle, g: &Graph) -> Result<bool> {
    is_rigid(oracle, &g.drop_isolated())
}

/// Edges lying in no circuit, i.e. coloops of `M(G)`.
pub fn bridges(oracle: &Oracle, g: &Graph) -> Result<Vec<Edge>> {
    let total = oracle.rank_edges(g.edges())?;
    let mut out = Vec::new();
    for &e in g.edges() {
        let rest: Vec<Edge> = g.edges().iter().copied().filter(|&f| f != e).collect();
        if oracle.inner.rank(&rest)? + 1 == total {
            out.push(e);
        }
    }
    Ok(out)
}

/// Edges of the host spanned by `E0`. The closure is taken inside `G`; pass
/// `K_{V(G)}` as host for the ambient closure.
pub fn closure(oracle: &Oracle, g: &Graph, e0: &[Edge]) -> Result<Vec<Edge>> {
    check_subset(g, e0)?;
    let base = normalized(e0);
    let r0 = oracle.inner.rank(&base)?;
    let mut out = Vec::new();
    for &e in g.edges() {
        if base.binary_search(&e).is_ok() {
            out.push(e);
            continue;
        }
        let mut with = base.clone();
        with.push(e);
        with.sort_unstable();
        if oracle.inner.rank(&with)? == r0 {
            out.push(e);
        }
    }
    Ok(out)
}
