//! Schmidt-type families `M_C`: `G` is independent iff it is `(k,0)`-sparse
//! and contains no subgraph isomorphic to a member of `C`, where the members
//! of `C` are 3-connected and `2k`-regular.

use crate::error::{invalid, Result};
use crate::graph::connectivity::is_k_connected;
use crate::graph::subgraph::contains_subgraph;
use crate::graph::{Edge, Graph};
use crate::matroid::Independence;

use super::count::count_independent;

pub(crate) fn validate(k: u32, c: &[Graph]) -> Result<()> {
    if k < 2 {
        return invalid(format!("forbidden-subgraph families need k >= 2, got {k}"));
    }
    for g in c {
        if g.has_isolated_vertices() || g.degrees().iter().any(|&d| d != 2 * k as usize) {
            return invalid(format!("member {g} is not {}-regular", 2 * k));
        }
        if !is_k_connected(g, 3) {
            return invalid(format!("member {g} is not 3-connected"));
        }
    }
    Ok(())
}

pub(crate) struct ForbiddenSparse {
    k: u32,
    c: Vec<Graph>,
}

impl ForbiddenSparse {
    pub(crate) fn new(k: u32, c: &[Graph]) -> Result<ForbiddenSparse> {
        validate(k, c)?;
        Ok(ForbiddenSparse { k, c: c.to_vec() })
    }
}

impl Independence for ForbiddenSparse {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        if !count_independent(edges, self.k, 0)? {
            return Ok(false);
        }
        let g = Graph::from_edge_set(edges.iter().copied());
        for member in &self.c {
            if contains_subgraph(&g, member)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn forbidden_sparse_independent(edges: &[Edge], k: u32, c: &[Graph]) -> Result<bool> {
    ForbiddenSparse::new(k, c)?.is_independent(edges)
}
