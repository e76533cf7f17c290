//! Named experiment suites. Each suite checks one statement on many small
//! instances and reports one row per instance.

use clap::Args;
use graph_matroids::families::{
    count_threshold, shipped_families, shipped_unbounded, DimThreshold, FamilySpec, KnownProfile,
};
use graph_matroids::graph::canon::are_isomorphic;
use graph_matroids::graph::connectivity::vertex_connectivity;
use graph_matroids::graph::{
    complete_graph, cycle_graph, enumerate_graphs, enumerate_graphs_by_edges, star_graph, Graph, Vertex,
};
use graph_matroids::matroid::{bridges, is_rigid, Oracle};
use graph_matroids::reconstruction::{
    bridge_witness, is_matroid_isomorphism, is_reconstructible, matroid_isomorphisms, star_preserving,
};
use graph_matroids::structure::{
    bounded_rank, compute_profile, probe_one_extendability, small_circuit_min_degree_one, Measure,
};
use graph_matroids::union::{construct_rigid_partition, union_threshold_bound};
use graph_matroids::vertical::{
    redundant_rigidity_to_vertical_harness, vertical_connectivity, vertical_to_vertex_connectivity_harness,
    HarnessReport,
};
use serde_json::{json, Value};

use crate::commands::graph_value;
use crate::report::{Report, Table, Verdict};
use crate::{CliResult, Failure};

pub const SUITES: [&str; 13] = [
    "rank-linearity",
    "gluing",
    "vertex-addition-bridges",
    "count-thresholds",
    "union-threshold",
    "graphic-vertical-conn",
    "prop35-harness",
    "prop36-harness",
    "bridge-witness",
    "bounded-whitney",
    "one-extendability",
    "whitney-twist",
    "even-cycle-not-1extendable",
];

#[derive(Args, Debug, Clone)]
pub struct SuiteArgs {
    /// Suite name; see the README for the list.
    pub suite: String,
    /// Family spec; repeat to check several. Defaults depend on the suite.
    #[arg(long)]
    pub family: Vec<String>,
    /// Size cap: vertices for most suites, edges for `bridge-witness`.
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random samples for suites that draw them.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Succeed only if a counterexample is found.
    #[arg(long)]
    pub expect_counterexample: bool,
}

#[derive(Clone, Debug)]
pub struct ExperimentSuite {
    pub name: &'static str,
    pub families: Vec<FamilySpec>,
    pub nmax: usize,
    pub trials: usize,
    pub seed: u64,
    /// Families known to violate the checked statement; their rows pass when
    /// a counterexample turns up.
    pub expected_counterexamples: Vec<FamilySpec>,
}

fn spec(text: &str) -> FamilySpec {
    text.parse().expect("built-in family specs parse")
}

fn unbounded_specs() -> Vec<FamilySpec> {
    shipped_unbounded().into_iter().map(|(s, _)| s).collect()
}

/// Registry defaults, overridden by the command-line arguments.
pub fn suite(args: &SuiteArgs) -> CliResult<ExperimentSuite> {
    let name = *SUITES.iter().find(|&&s| s == args.suite).ok_or_else(|| {
        Failure::Usage(format!("unknown suite {:?}; known suites: {}", args.suite, SUITES.join(", ")))
    })?;
    let (families, nmax, trials, expected): (Vec<FamilySpec>, usize, usize, Vec<FamilySpec>) = match name {
        "rank-linearity" => (unbounded_specs(), 8, 0, vec![]),
        "gluing" => (unbounded_specs(), 7, 0, vec![]),
        "vertex-addition-bridges" => (shipped_families(), 6, 0, vec![]),
        "count-thresholds" => (vec![spec("count:k=2,l=3")], 8, 0, vec![]),
        "union-threshold" => (vec![spec("union(graphic;graphic)")], 6, 0, vec![]),
        "graphic-vertical-conn" => (vec![FamilySpec::Graphic], 6, 0, vec![]),
        "prop35-harness" => (unbounded_specs(), 6, 0, vec![]),
        "prop36-harness" => (vec![FamilySpec::Graphic, spec("count:k=2,l=3")], 6, 0, vec![]),
        "bridge-witness" => (vec![FamilySpec::Graphic, FamilySpec::Bicircular], 7, 0, vec![]),
        "bounded-whitney" => (vec![spec("stars:m=3")], 8, 0, vec![]),
        "one-extendability" => {
            let families = shipped_families().into_iter().filter(|s| s.is_bounded() == Some(false)).collect();
            (families, 6, 200, vec![FamilySpec::EvenCycle])
        }
        "whitney-twist" => (vec![FamilySpec::Graphic], 6, 0, vec![]),
        "even-cycle-not-1extendable" => (vec![FamilySpec::EvenCycle], 6, 200, vec![]),
        _ => unreachable!("registry and defaults list the same suites"),
    };
    let explicit = !args.family.is_empty();
    let families = if explicit {
        args.family
            .iter()
            .map(|f| f.trim().parse::<FamilySpec>().map_err(|e| Failure::Usage(format!("--family {f:?}: {e}"))))
            .collect::<CliResult<Vec<_>>>()?
    } else {
        families
    };
    if name == "graphic-vertical-conn" && families.iter().any(|f| *f != FamilySpec::Graphic) {
        return Err(Failure::Usage("graphic-vertical-conn only checks the graphic family".into()));
    }
    Ok(ExperimentSuite {
        name,
        families,
        nmax: args.nmax.unwrap_or(nmax),
        trials: args.trials.unwrap_or(trials),
        seed: args.seed,
        // Documented exceptions describe the default family list only.
        expected_counterexamples: if explicit { vec![] } else { expected },
    })
}

/// One checked instance: `holds` says whether the statement held there.
struct Row {
    family: Option<FamilySpec>,
    cells: Vec<Value>,
    holds: bool,
}

struct Outcome {
    columns: Vec<&'static str>,
    rows: Vec<Row>,
}

impl Outcome {
    fn new(columns: &[&'static str]) -> Outcome {
        Outcome { columns: columns.to_vec(), rows: Vec::new() }
    }

    fn row(&mut self, family: Option<&FamilySpec>, cells: Vec<Value>, holds: bool) {
        self.rows.push(Row { family: family.cloned(), cells, holds });
    }
}

fn oracle(spec: &FamilySpec) -> CliResult<Oracle> {
    Ok(Oracle::from_spec(spec)?)
}

fn profile_of(spec: &FamilySpec, nmax: usize) -> CliResult<Option<DimThreshold>> {
    if let Some(KnownProfile::Unbounded { d, t }) = spec.documented_profile() {
        return Ok(Some(DimThreshold { d, t }));
    }
    Ok(compute_profile(&oracle(spec)?, nmax)?.exact_unbounded())
}

pub fn run_suite(args: &SuiteArgs) -> CliResult<Report> {
    let s = suite(args)?;
    let out = match s.name {
        "rank-linearity" => rank_linearity(&s)?,
        "gluing" => gluing(&s)?,
        "vertex-addition-bridges" => vertex_addition_bridges(&s)?,
        "count-thresholds" => count_thresholds(&s)?,
        "union-threshold" => union_threshold(&s)?,
        "graphic-vertical-conn" => graphic_vertical_conn(&s)?,
        "prop35-harness" => prop35(&s)?,
        "prop36-harness" => prop36(&s)?,
        "bridge-witness" => bridge_suite(&s)?,
        "bounded-whitney" => bounded_whitney(&s)?,
        "one-extendability" | "even-cycle-not-1extendable" => one_extendability(&s)?,
        "whitney-twist" => whitney_twist(&s)?,
        _ => unreachable!("suite() only returns registered names"),
    };
    let mut report = Report::new(format!("experiment {}", s.name));
    report.family = Some(s.families.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" "));
    report.seed = s.seed;
    report.cap("nmax", s.nmax);
    if s.trials > 0 {
        report.cap("trials", s.trials);
    }
    let mut columns = out.columns.clone();
    columns.extend(["outcome", "expected"]);
    let mut table = Table::new(&columns);
    let mut counterexamples = 0;
    let mut unexpected = 0;
    for row in out.rows {
        let expected_violation = row.family.as_ref().is_some_and(|f| s.expected_counterexamples.contains(f));
        counterexamples += !row.holds as usize;
        unexpected += (row.holds == expected_violation) as usize;
        let mut cells = row.cells;
        cells.push(if row.holds { "holds" } else { "counterexample" }.into());
        cells.push(if expected_violation { "counterexample" } else { "holds" }.into());
        table.push(cells);
    }
    report.field("instances", table.rows.len()).field("counterexamples", counterexamples);
    let pass = if args.expect_counterexample { counterexamples > 0 } else { unexpected == 0 };
    report.verdict = Some(if pass { Verdict::Pass } else { Verdict::Fail });
    report.table = Some(table);
    Ok(report)
}

fn rank_linearity(s: &ExperimentSuite) -> CliResult<Outcome> {
    let mut out = Outcome::new(&["family", "d", "t", "complete_ranks", "mismatch"]);
    for spec in &s.families {
        let o = oracle(spec)?;
        let Some(DimThreshold { d, t }) = profile_of(spec, s.nmax.min(8))? else {
            return Err(Failure::Usage(format!("{spec} has no exact unbounded profile")));
        };
        let ranks = (t..=s.nmax.max(t)).map(|n| o.rank_complete(n)).collect::<Result<Vec<_>, _>>()?;
        let mismatch = ranks.iter().enumerate().find(|(i, &r)| r != d * i + ranks[0]).map(|(i, _)| t + i);
        out.row(
            Some(spec),
            vec![spec.to_string().into(), d.into(), t.into(), json!(ranks), json!(mismatch)],
            mismatch.is_none(),
        );
    }
    Ok(out)
}

/// Two rigid graphs on at most five vertices glued along `k >= t` vertices,
/// the result having at most `nmax` vertices, must be rigid.
fn gluing(s: &ExperimentSuite) -> CliResult<Outcome> {
    let pieces = enumerate_graphs(5.min(s.nmax), |_| true)?;
    let mut out = Outcome::new(&["family", "t", "glued", "failure"]);
    for spec in &s.families {
        let o = oracle(spec)?;
        let Some(DimThreshold { t, .. }) = profile_of(spec, 8)? else {
            return Err(Failure::Usage(format!("{spec} has no exact unbounded profile")));
        };
        let mut rigid = Vec::new();
        for g in &pieces {
            if is_rigid(&o, g)? {
                rigid.push(g);
            }
        }
        let mut glued = 0usize;
        let mut failure = None;
        'outer: for g1 in &rigid {
            for g2 in &rigid {
                let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
                for k in t..=n1.min(n2) {
                    if n1 + n2 - k > s.nmax {
                        continue;
                    }
                    let shift = (n1 - k) as Vertex;
                    let union = g1.union(&g2.relabel(|v| v + shift)?);
                    glued += 1;
                    if !is_rigid(&o, &union)? {
                        failure = Some(union);
                        break 'outer;
                    }
                }
            }
        }
        let holds = failure.is_none();
        out.row(
            Some(spec),
            vec![spec.to_string().into(), t.into(), glued.into(), failure.as_ref().map_or(Value::Null, graph_value)],
            holds,
        );
    }
    Ok(out)
}

/// The edges at a vertex of degree at most `d` are bridges.
fn vertex_addition_bridges(s: &ExperimentSuite) -> CliResult<Outcome> {
    let graphs = enumerate_graphs(s.nmax, |_| true)?;
    let mut out = Outcome::new(&["family", "d", "graphs", "failure"]);
    for spec in &s.families {
        let o = oracle(spec)?;
        let d = spec
            .nominal_dimensionality()
            .ok_or_else(|| Failure::Usage(format!("{spec} has no known dimensionality")))?;
        let mut failure = None;
        for g in &graphs {
            let found = bridges(&o, g)?;
            let low = g.vertices().iter().any(|&v| g.degree(v) <= d && g.star(v).iter().any(|e| !found.contains(e)));
            if low {
                failure = Some(g);
                break;
            }
        }
        let holds = failure.is_none();
        out.row(
            Some(spec),
            vec![spec.to_string().into(), d.into(), graphs.len().into(), failure.map_or(Value::Null, graph_value)],
            holds,
        );
    }
    Ok(out)
}

/// Computed thresholds of `count(k, l)` for every `l` against the closed
/// form, for each `k` among the given count families.
fn count_thresholds(s: &ExperimentSuite) -> CliResult<Outcome> {
    let mut out = Outcome::new(&["k", "l", "d", "t", "formula_t"]);
    let mut ks: Vec<u32> = Vec::new();
    for spec in &s.families {
        match spec {
            FamilySpec::Count { k, .. } if !ks.contains(k) => ks.push(*k),
            FamilySpec::Count { .. } => {}
            other => return Err(Failure::Usage(format!("count-thresholds takes count families, got {other}"))),
        }
    }
    for k in ks {
        for l in (0..=2 * k as i32 - 1).rev() {
            let spec = FamilySpec::Count { k, l };
            let p = compute_profile(&oracle(&spec)?, s.nmax)?;
            let formula = count_threshold(k, l);
            let holds = p.dimensionality == Measure::Observed(k as usize)
                && p.threshold_exact
                && p.threshold.value() == formula;
            out.row(
                Some(&spec),
                vec![
                    k.into(),
                    l.into(),
                    p.dimensionality.to_string().into(),
                    p.threshold.to_string().into(),
                    json!(formula),
                ],
                holds,
            );
        }
    }
    Ok(out)
}

/// The threshold of a union is at most the sum of `max(t_i, 2 d_i)`, and at
/// that many vertices the complete graph splits into rigid parts.
fn union_threshold(s: &ExperimentSuite) -> CliResult<Outcome> {
    let mut out = Outcome::new(&["family", "d", "t", "bound", "rigid_split_at_bound"]);
    for spec in &s.families {
        let FamilySpec::Union { parts } = spec else {
            return Err(Failure::Usage(format!("union-threshold takes union(...) families, got {spec}")));
        };
        let profiles = parts.iter().map(|p| profile_of(p, 8)).collect::<CliResult<Vec<_>>>()?;
        let bound = union_threshold_bound(&profiles)?;
        let p = compute_profile(&oracle(spec)?, s.nmax)?;
        let with_profiles: Vec<(Oracle, DimThreshold)> = parts
            .iter()
            .zip(&profiles)
            .map(|(p, prof)| Ok((oracle(p)?, prof.expect("checked by the bound"))))
            .collect::<CliResult<_>>()?;
        let split = construct_rigid_partition(&with_profiles, bound).is_ok();
        let d_sum: usize = profiles.iter().map(|p| p.expect("checked").d).sum();
        let holds = split
            && p.dimensionality == Measure::Observed(d_sum)
            && match p.threshold {
                Measure::Observed(t) => t <= bound,
                Measure::AtLeast(_) => false,
            };
        out.row(
            Some(spec),
            vec![
                spec.to_string().into(),
                p.dimensionality.to_string().into(),
                p.threshold.to_string().into(),
                bound.into(),
                split.into(),
            ],
            holds,
        );
    }
    Ok(out)
}

fn graphic_vertical_conn(s: &ExperimentSuite) -> CliResult<Outcome> {
    let graphic = Oracle::from_spec(&FamilySpec::Graphic)?;
    let graphs = enumerate_graphs(s.nmax, |g| g.is_connected() && g.edge_count() >= 2)?;
    let mut out = Outcome::new(&["vertices", "graphs", "mismatch"]);
    for n in 2..=s.nmax {
        let level: Vec<&Graph> = graphs.iter().filter(|g| g.vertex_count() == n).collect();
        let mut mismatch = None;
        for g in &level {
            if vertical_connectivity(&graphic, g)?.value != vertex_connectivity(g)? {
                mismatch = Some(*g);
                break;
            }
        }
        let holds = mismatch.is_none();
        out.row(
            Some(&FamilySpec::Graphic),
            vec![n.into(), level.len().into(), mismatch.map_or(Value::Null, graph_value)],
            holds,
        );
    }
    Ok(out)
}

fn harness_cells(spec: &FamilySpec, extra: Option<usize>, h: &HarnessReport) -> Vec<Value> {
    let mut cells = vec![spec.to_string().into()];
    if let Some(k) = extra {
        cells.push(k.into());
    }
    cells.extend([
        h.hosts_checked.into(),
        h.premises_met.into(),
        h.counterexample.as_ref().map_or(Value::Null, graph_value),
    ]);
    cells
}

/// Vertical `(r(K_t) + 2)`-connectivity forces `(t + 1)`-connectivity.
fn prop35(s: &ExperimentSuite) -> CliResult<Outcome> {
    let mut out = Outcome::new(&["family", "hosts", "premise_met", "counterexample"]);
    for spec in &s.families {
        let h = vertical_to_vertex_connectivity_harness(&oracle(spec)?, s.nmax)?;
        out.row(Some(spec), harness_cells(spec, None, &h), h.counterexample.is_none());
    }
    Ok(out)
}

/// `k`-connected, `k`-redundantly rigid graphs have vertically
/// `(k + 1)`-connected matroids.
fn prop36(s: &ExperimentSuite) -> CliResult<Outcome> {
    let mut out = Outcome::new(&["family", "k", "hosts", "premise_met", "counterexample"]);
    for spec in &s.families {
        let o = oracle(spec)?;
        for k in 1..=2 {
            let h = redundant_rigidity_to_vertical_harness(&o, k, s.nmax)?;
            out.row(Some(spec), harness_cells(spec, Some(k), &h), h.counterexample.is_none());
        }
    }
    Ok(out)
}

/// Graphs whose matroid has a bridge are not reconstructible, with a
/// certified pair of relocated graphs.
fn bridge_suite(s: &ExperimentSuite) -> CliResult<Outcome> {
    let graphs = enumerate_graphs_by_edges(s.nmax, 2 * s.nmax)?;
    let mut out = Outcome::new(&["family", "with_bridge", "failure"]);
    for spec in &s.families {
        let o = oracle(spec)?;
        let mut with_bridge = 0usize;
        let mut failure = None;
        for g in graphs.iter().filter(|g| g.edge_count() >= 2) {
            if bridges(&o, g)?.is_empty() {
                continue;
            }
            with_bridge += 1;
            if is_reconstructible(&o, g, 2)?.reconstructible || bridge_witness(&o, g)?.is_none() {
                failure = Some(g);
                break;
            }
        }
        let holds = failure.is_none();
        out.row(
            Some(spec),
            vec![spec.to_string().into(), with_bridge.into(), failure.map_or(Value::Null, graph_value)],
            holds,
        );
    }
    Ok(out)
}

/// In a bounded family with limit rank `r`, every matroid self-isomorphism
/// of a graph with minimum degree at least `2r` is star-preserving.
fn bounded_whitney(s: &ExperimentSuite) -> CliResult<Outcome> {
    let mut out = Outcome::new(&["family", "rank", "star_circuit", "hosts", "isomorphisms", "failure"]);
    for spec in &s.families {
        let o = oracle(spec)?;
        let r = bounded_rank(&o)?;
        let star = small_circuit_min_degree_one(&o)?;
        let star_ok = star.as_ref().is_none_or(|c| are_isomorphic(&c.witness, &star_graph(c.m).expect("m >= 1")));
        let hosts = enumerate_graphs(s.nmax, |g| g.min_degree().is_some_and(|d| d >= 2 * r))?;
        let mut total = 0usize;
        let mut failure = None;
        for g in &hosts {
            let isos = matroid_isomorphisms(&o, g, g, usize::MAX)?;
            total += isos.len();
            if isos.is_empty() || isos.iter().any(|psi| !star_preserving(g, g, psi)) {
                failure = Some(g);
                break;
            }
        }
        let holds = star_ok && failure.is_none();
        out.row(
            Some(spec),
            vec![
                spec.to_string().into(),
                r.into(),
                json!(star.map(|c| c.m)),
                hosts.len().into(),
                total.into(),
                failure.map_or(Value::Null, graph_value),
            ],
            holds,
        );
    }
    Ok(out)
}

/// `d`-dimensional edge splits preserve independence.
fn one_extendability(s: &ExperimentSuite) -> CliResult<Outcome> {
    let mut out = Outcome::new(&["family", "d", "graphs", "graph", "split"]);
    for spec in &s.families {
        let d = spec
            .nominal_dimensionality()
            .filter(|&d| d > 0)
            .ok_or_else(|| Failure::Usage(format!("{spec} has no positive dimensionality to split with")))?;
        let report = probe_one_extendability(&oracle(spec)?, d, s.nmax, s.trials, s.seed)?;
        let (graph, split) = match &report.counterexample {
            Some(v) => (graph_value(&v.graph), graph_value(&v.split)),
            None => (Value::Null, Value::Null),
        };
        out.row(
            Some(spec),
            vec![spec.to_string().into(), d.into(), report.graphs_checked.into(), graph, split],
            report.counterexample.is_none(),
        );
    }
    Ok(out)
}

/// Two disjoint triangles and the two triangles sharing a vertex have the
/// same graphic matroid; `K_4` is reconstructible. Hosts have at most `nmax`
/// vertices.
fn whitney_twist(s: &ExperimentSuite) -> CliResult<Outcome> {
    let graphic = Oracle::from_spec(&FamilySpec::Graphic)?;
    let mut out = Outcome::new(&["graph", "expected_reconstructible", "reconstructible", "witness_host"]);
    let triangle = cycle_graph(3)?;
    let twins = triangle.union(&triangle.relabel(|v| v + 3)?);
    let k4 = complete_graph(4)?;
    for (g, expect) in [(twins, false), (k4, true)] {
        let v = is_reconstructible(&graphic, &g, s.nmax.saturating_sub(g.vertex_count()))?;
        let certified = match &v.witness {
            Some(w) => is_matroid_isomorphism(&graphic, &g, &w.host, &w.bijection)?,
            None => true,
        };
        let host = v.witness.as_ref().map_or(Value::Null, |w| graph_value(&w.host));
        out.row(
            Some(&FamilySpec::Graphic),
            vec![graph_value(&g), expect.into(), v.reconstructible.into(), host],
            certified && v.reconstructible == expect,
        );
    }
    Ok(out)
}
