//! Concrete graph matroid families.
//!
//! A [`FamilySpec`] is the declarative identity of a family; [`build`] turns
//! it into an independence oracle. The text syntax accepted by `FromStr` is
//! documented in [`syntax`].

pub mod count;
pub mod forbidden;
pub mod rigidity;
pub mod syntax;
pub mod union_stable;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{canon::canonical_form, star_graph, DisjointSets, Edge, Graph};
use crate::matroid::{Independence, Oracle};

pub use count::{count_independent, PebbleState};
pub use forbidden::forbidden_sparse_independent;
pub use rigidity::{rigidity_independent, RIGIDITY_PRIME};
pub use union_stable::{union_stable_check, union_stable_independent};

/// Default number of random trials for the rigidity oracle.
pub const DEFAULT_RIGIDITY_TRIALS: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Graphic,
    Bicircular,
    EvenCycle,
    Count { k: u32, l: i32 },
    Rigidity { d: u32, trials: u32, seed: u64 },
    Uniform { k: usize },
    Truncation { inner: Box<FamilySpec>, k: usize },
    UnionStable { x: Vec<Graph>, k: usize },
    ForbiddenSparse { k: u32, c: Vec<Graph> },
    Union { parts: Vec<FamilySpec> },
    DeCone { inner: Box<FamilySpec> },
}

/// Dimensionality and threshold of a nontrivial family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DimThreshold {
    pub d: usize,
    pub t: usize,
}

/// What is known in closed form about a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum KnownProfile {
    Unbounded { d: usize, t: usize },
    Bounded { rank: usize },
}

impl FamilySpec {
    pub fn rigidity(d: u32) -> FamilySpec {
        FamilySpec::Rigidity { d, trials: DEFAULT_RIGIDITY_TRIALS, seed: 0 }
    }

    /// The star family `X = {K_{1,m}}` with `k = m`.
    pub fn stars(m: usize) -> Result<FamilySpec> {
        Ok(FamilySpec::UnionStable { x: vec![star_graph(m)?], k: m })
    }

    /// Schmidt-type family with `C = {K_{2k+1}}`.
    pub fn forbidden_complete(k: u32) -> Result<FamilySpec> {
        Ok(FamilySpec::ForbiddenSparse { k, c: vec![crate::graph::complete_graph(2 * k as usize + 1)?] })
    }

    /// The seed governing internal randomness (first rigidity seed found).
    pub fn seed(&self) -> u64 {
        match self {
            FamilySpec::Rigidity { seed, .. } => *seed,
            FamilySpec::Truncation { inner, .. } | FamilySpec::DeCone { inner } => inner.seed(),
            FamilySpec::Union { parts } => parts.iter().map(|p| p.seed()).find(|&s| s != 0).unwrap_or(0),
            _ => 0,
        }
    }

    /// Profile for families whose invariants are known in closed form.
    pub fn documented_profile(&self) -> Option<KnownProfile> {
        use KnownProfile::*;
        match self {
            FamilySpec::Graphic => Some(Unbounded { d: 1, t: 2 }),
            FamilySpec::Bicircular | FamilySpec::EvenCycle => Some(Unbounded { d: 1, t: 3 }),
            FamilySpec::Count { k, l } => count_threshold(*k, *l).map(|t| Unbounded { d: *k as usize, t }),
            FamilySpec::Rigidity { d, .. } => Some(Unbounded { d: *d as usize, t: *d as usize + 1 }),
            FamilySpec::Uniform { k } => Some(Bounded { rank: *k }),
            FamilySpec::Truncation { inner, k } => match inner.documented_profile()? {
                Unbounded { .. } => Some(Bounded { rank: *k }),
                Bounded { rank } => Some(Bounded { rank: rank.min(*k) }),
            },
            FamilySpec::UnionStable { k, .. } => Some(Bounded { rank: *k }),
            FamilySpec::Union { parts } => {
                let graphic = parts.iter().all(|p| *p == FamilySpec::Graphic || *p == FamilySpec::Count { k: 1, l: 1 });
                (graphic && !parts.is_empty()).then(|| Unbounded { d: parts.len(), t: 2 * parts.len() })
            }
            FamilySpec::ForbiddenSparse { .. } | FamilySpec::DeCone { .. } => None,
        }
    }

    /// Dimensionality implied by the definition, where one is known: the
    /// documented value, the sum over union parts, or one less than the inner
    /// family's for de-coning.
    pub fn nominal_dimensionality(&self) -> Option<usize> {
        match self.documented_profile() {
            Some(KnownProfile::Unbounded { d, .. }) => Some(d),
            Some(KnownProfile::Bounded { .. }) => Some(0),
            None => match self {
                FamilySpec::ForbiddenSparse { k, .. } => Some(*k as usize),
                FamilySpec::Count { k, .. } => Some(*k as usize),
                FamilySpec::Union { parts } => parts.iter().map(|p| p.nominal_dimensionality()).sum(),
                FamilySpec::DeCone { inner } => inner.nominal_dimensionality().map(|d| d.saturating_sub(1)),
                _ => None,
            },
        }
    }

    pub fn is_bounded(&self) -> Option<bool> {
        self.nominal_dimensionality().map(|d| d == 0)
    }

    /// Checks the parameter invariants of every constructor.
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Count { k, l } => {
                if *k < 1 || *l > 2 * *k as i32 - 1 {
                    return invalid(format!("count family needs k >= 1 and l <= 2k-1, got k={k}, l={l}"));
                }
            }
            FamilySpec::Rigidity { d, trials, .. } => {
                if *d < 1 || *trials < 1 {
                    return invalid("rigidity family needs d >= 1 and at least one trial");
                }
            }
            FamilySpec::Truncation { inner, .. } => inner.validate()?,
            FamilySpec::UnionStable { x, k } => {
                if !union_stable_check(x, *k)? {
                    return invalid("the graph set is not union-stable");
                }
            }
            FamilySpec::ForbiddenSparse { k, c } => forbidden::validate(*k, c)?,
            FamilySpec::Union { parts } => {
                if parts.is_empty() {
                    return invalid("a union needs at least one part");
                }
                for p in parts {
                    p.validate()?;
                }
            }
            FamilySpec::DeCone { inner } => {
                inner.validate()?;
                if inner.is_bounded() != Some(false) {
                    return invalid("de-coning needs an inner family known to be unbounded");
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// Threshold of the count family `M_{k,l}` for `0 <= l <= 2k - 1`: the
/// smallest `m > k` with `C(m, 2) >= km - l`, i.e. where `K_m` first has the
/// full count `km - l` edges available. From there on `r(K_n) = kn - l`, so
/// the rank is linear. For `k >= 2` this is `2k - 1` if `l = 2k - 1`, `2k` if
/// `k <= l < 2k - 1` and `2k + 1` if `l < k`.
pub fn count_threshold(k: u32, l: i32) -> Option<usize> {
    if k == 0 || l < 0 || l > 2 * k as i32 - 1 {
        return None;
    }
    let (k, l) = (k as i64, l as i64);
    (k + 1..).find(|&m| m * (m - 1) / 2 >= k * m - l).map(|m| m as usize)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Graphic => write!(f, "graphic"),
            FamilySpec::Bicircular => write!(f, "bicircular"),
            FamilySpec::EvenCycle => write!(f, "even-cycle"),
            FamilySpec::Count { k, l } => write!(f, "count:k={k},l={l}"),
            FamilySpec::Rigidity { d, trials, seed } => {
                write!(f, "rigidity:d={d}")?;
                if *trials != DEFAULT_RIGIDITY_TRIALS {
                    write!(f, ",trials={trials}")?;
                }
                if *seed != 0 {
                    write!(f, ",seed={seed}")?;
                }
                Ok(())
            }
            FamilySpec::Uniform { k } => write!(f, "uniform:k={k}"),
            FamilySpec::Truncation { inner, k } => write!(f, "trunc({inner},k={k})"),
            FamilySpec::UnionStable { x, k } => match x.as_slice() {
                [s] if s.edge_count() == *k
                    && star_graph(*k).is_ok_and(|st| canonical_form(&st) == canonical_form(s)) =>
                {
                    write!(f, "stars:m={k}")
                }
                _ => write!(f, "union-stable:k={k},members={}", x.len()),
            },
            FamilySpec::ForbiddenSparse { k, c } => {
                let kc = crate::graph::complete_graph(2 * *k as usize + 1).ok();
                match c.as_slice() {
                    [] => write!(f, "forbidden:k={k},c=none"),
                    [g] if kc.is_some_and(|kc| canonical_form(&kc) == canonical_form(g)) => {
                        write!(f, "forbidden:k={k}")
                    }
                    _ => write!(f, "forbidden:k={k},members={}", c.len()),
                }
            }
            FamilySpec::Union { parts } => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "union({})", inner.join(";"))
            }
            FamilySpec::DeCone { inner } => write!(f, "decone({inner})"),
        }
    }
}

/// The families used throughout tests, suites and documentation, in a fixed
/// order.
pub fn shipped_families() -> Vec<FamilySpec> {
    let mut out = vec![
        FamilySpec::Graphic,
        FamilySpec::Bicircular,
        FamilySpec::EvenCycle,
        FamilySpec::Count { k: 2, l: 3 },
        FamilySpec::Count { k: 2, l: 2 },
        FamilySpec::Count { k: 2, l: 1 },
        FamilySpec::Count { k: 2, l: 0 },
        FamilySpec::rigidity(1),
        FamilySpec::rigidity(2),
        FamilySpec::rigidity(3),
        FamilySpec::Uniform { k: 3 },
        FamilySpec::Truncation { inner: Box::new(FamilySpec::Graphic), k: 5 },
        FamilySpec::stars(3).expect("K_{1,3} is valid"),
        FamilySpec::forbidden_complete(2).expect("K_5 is valid"),
        FamilySpec::Union { parts: vec![FamilySpec::Graphic, FamilySpec::Graphic] },
        FamilySpec::DeCone { inner: Box::new(FamilySpec::rigidity(3)) },
    ];
    out.dedup();
    out
}

/// Shipped unbounded families with a documented `(d, t)`.
pub fn shipped_unbounded() -> Vec<(FamilySpec, DimThreshold)> {
    shipped_families()
        .into_iter()
        .filter_map(|s| match s.documented_profile() {
            Some(KnownProfile::Unbounded { d, t }) => Some((s, DimThreshold { d, t })),
            _ => None,
        })
        .collect()
}

pub(crate) fn build(spec: &FamilySpec) -> Result<Arc<dyn Independence>> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Graphic => Arc::new(Graphic),
        FamilySpec::Bicircular => Arc::new(Bicircular),
        FamilySpec::EvenCycle => Arc::new(EvenCycle),
        FamilySpec::Count { k, l } => Arc::new(count::Count::new(*k, *l)?),
        FamilySpec::Rigidity { d, trials, seed } => {
            Arc::new(rigidity::Rigidity { d: *d, trials: *trials, seed: *seed })
        }
        FamilySpec::Uniform { k } => Arc::new(Uniform(*k)),
        FamilySpec::Truncation { inner, k } => Arc::new(Truncation { inner: build(inner)?, k: *k }),
        FamilySpec::UnionStable { x, k } => Arc::new(union_stable::UnionStable::new(x, *k)),
        FamilySpec::ForbiddenSparse { k, c } => Arc::new(forbidden::ForbiddenSparse::new(*k, c)?),
        FamilySpec::Union { parts } => {
            let oracles = parts.iter().map(Oracle::from_spec).collect::<Result<Vec<_>>>()?;
            Arc::new(crate::union::UnionFamily::new(oracles))
        }
        FamilySpec::DeCone { inner } => Arc::new(DeCone(build(inner)?)),
    })
}

/// Forest test.
pub fn graphic_independent(edges: &[Edge]) -> bool {
    forest_components(edges).is_some()
}

/// Every component has at most as many edges as vertices.
pub fn bicircular_independent(edges: &[Edge]) -> bool {
    component_stats(edges).iter().all(|c| c.edges <= c.vertices)
}

/// Pseudoforest whose cycles are all odd.
pub fn even_cycle_independent(edges: &[Edge]) -> bool {
    component_stats(edges).iter().all(|c| c.edges < c.vertices || (c.edges == c.vertices && !c.bipartite))
}

pub fn uniform_independent(edges: &[Edge], k: usize) -> bool {
    edges.len() <= k
}

fn forest_components(edges: &[Edge]) -> Option<usize> {
    let (index, n) = vertex_index(edges);
    let mut dsu = DisjointSets::new(n);
    for e in edges {
        if !dsu.union(index(e.u()), index(e.v())) {
            return None;
        }
    }
    Some(n - edges.len())
}

#[derive(Debug)]
struct ComponentStats {
    vertices: usize,
    edges: usize,
    bipartite: bool,
}

fn vertex_index(edges: &[Edge]) -> (impl Fn(u32) -> usize, usize) {
    let mut vs: Vec<u32> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
    vs.sort_unstable();
    vs.dedup();
    let n = vs.len();
    (move |v| vs.binary_search(&v).expect("endpoint indexed"), n)
}

fn component_stats(edges: &[Edge]) -> Vec<ComponentStats> {
    let (index, n) = vertex_index(edges);
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        let (a, b) = (index(e.u()), index(e.v()));
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color = vec![u8::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        let (mut vertices, mut degree_sum, mut bipartite) = (0, 0, true);
        while let Some(x) = stack.pop() {
            vertices += 1;
            degree_sum += adj[x].len();
            for &y in &adj[x] {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    stack.push(y);
                } else if color[y] == color[x] {
                    bipartite = false;
                }
            }
        }
        out.push(ComponentStats { vertices, edges: degree_sum / 2, bipartite });
    }
    out
}

struct Graphic;

impl Independence for Graphic {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        Ok(graphic_independent(edges))
    }

    fn basis(&self, edges: &[Edge]) -> Result<Vec<Edge>> {
        let (index, n) = vertex_index(edges);
        let mut dsu = DisjointSets::new(n);
        Ok(edges.iter().copied().filter(|e| dsu.union(index(e.u()), index(e.v()))).collect())
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        Ok(component_stats(edges).iter().map(|c| c.vertices - 1).sum())
    }
}

struct Bicircular;

impl Independence for Bicircular {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        Ok(bicircular_independent(edges))
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        Ok(component_stats(edges).iter().map(|c| c.edges.min(c.vertices)).sum())
    }
}

struct EvenCycle;

impl Independence for EvenCycle {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        Ok(even_cycle_independent(edges))
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        Ok(component_stats(edges).iter().map(|c| c.vertices - usize::from(c.bipartite)).sum())
    }
}

struct Uniform(usize);

impl Independence for Uniform {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        Ok(uniform_independent(edges, self.0))
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        Ok(edges.len().min(self.0))
    }
}

struct Truncation {
    inner: Arc<dyn Independence>,
    k: usize,
}

impl Independence for Truncation {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        Ok(edges.len() <= self.k && self.inner.is_independent(edges)?)
    }

    fn rank(&self, edges: &[Edge]) -> Result<usize> {
        Ok(self.inner.rank(edges)?.min(self.k))
    }
}

/// `G` is independent iff its cone is independent in the inner family.
pub fn decone_independent(edges: &[Edge], inner: &Oracle) -> Result<bool> {
    DeCone(inner.independence().clone()).is_independent(edges)
}

struct DeCone(Arc<dyn Independence>);

impl Independence for DeCone {
    fn is_independent(&self, edges: &[Edge]) -> Result<bool> {
        let g = Graph::from_edge_set(edges.iter().copied());
        self.0.is_independent(crate::graph::cone(&g).edges())
    }
}
