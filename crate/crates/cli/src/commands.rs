use graph_matroids::families::{FamilySpec, KnownProfile};
use graph_matroids::graph::connectivity::vertex_connectivity;
use graph_matroids::graph::{Edge, Graph};
use graph_matroids::matroid::axioms::{verify_family_axioms, verify_matroid_axioms};
use graph_matroids::matroid::{bridges, circuits, closure, is_rigid, rank, Oracle, CIRCUIT_SIZE_CAP};
use graph_matroids::reconstruction::{bridge_witness, is_reconstructible, RECONSTRUCTION_EDGE_CAP};
use graph_matroids::structure::{bounded_rank, compute_profile, small_circuit_min_degree_one};
use graph_matroids::union::{union_independent, union_rank};
use graph_matroids::vertical::{find_vertical_separation, vertical_connectivity, SEPARATION_EDGE_CAP};
use serde_json::{json, Value};

use crate::report::{Report, Table, Verdict};
use crate::{parse_family, read_graph, suites, CliResult, Command, Failure, GraphArgs};

pub fn edges(list: &[Edge]) -> Value {
    Value::Array(list.iter().map(|e| json!([e.u(), e.v()])).collect())
}

pub fn graph_value(g: &Graph) -> Value {
    edges(g.edges())
}

struct Target {
    spec: FamilySpec,
    oracle: Oracle,
    graph: Graph,
}

fn load(args: &GraphArgs) -> CliResult<Target> {
    let (spec, oracle) = parse_family(&args.family.family)?;
    let graph = read_graph(&args.graph)?;
    Ok(Target { spec, oracle, graph })
}

fn start(command: &str, t: &Target) -> Report {
    let mut r = Report::new(command);
    r.family = Some(t.spec.to_string());
    r.seed = t.oracle.seed();
    r.field("vertices", t.graph.vertex_count()).field("edges", t.graph.edge_count());
    r
}

pub fn dispatch(command: &Command) -> CliResult<Report> {
    match command {
        Command::Rank(args) => {
            let t = load(args)?;
            let found = rank(&t.oracle, &t.graph)?;
            let mut r = start("rank", &t);
            r.field("rank", found.rank).field("basis", edges(&found.basis));
            Ok(r)
        }
        Command::Rigid(args) => {
            let t = load(args)?;
            let rigid = is_rigid(&t.oracle, &t.graph)?;
            let mut r = start("rigid", &t);
            r.field("rank", t.oracle.rank_edges(t.graph.edges())?)
                .field("complete_rank", t.oracle.rank_complete(t.graph.vertex_count())?)
                .field("rigid", rigid);
            Ok(r)
        }
        Command::Circuits { target, max_size } => {
            let t = load(target)?;
            let found = circuits(&t.oracle, &t.graph, *max_size)?;
            let mut r = start("circuits", &t);
            r.cap("circuit_size", max_size.unwrap_or(CIRCUIT_SIZE_CAP));
            r.field("count", found.len());
            let mut table = Table::new(&["size", "circuit"]);
            for c in &found {
                table.push(vec![c.len().into(), edges(c)]);
            }
            r.table = Some(table);
            Ok(r)
        }
        Command::Bridges(args) => {
            let t = load(args)?;
            let found = bridges(&t.oracle, &t.graph)?;
            let mut r = start("bridges", &t);
            r.field("count", found.len()).field("bridges", edges(&found));
            Ok(r)
        }
        Command::Closure { target, subset } => {
            let t = load(target)?;
            let mut r = start("closure", &t);
            let (host, base) = match subset {
                Some(path) => (t.graph.clone(), read_graph(path)?.edges().to_vec()),
                None => {
                    let vs = t.graph.vertices();
                    let pairs = vs.iter().enumerate().flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)));
                    (Graph::from_edges(pairs)?, t.graph.edges().to_vec())
                }
            };
            let closed = closure(&t.oracle, &host, &base)?;
            let added: Vec<Edge> = closed.iter().copied().filter(|e| !base.contains(e)).collect();
            r.field("scope", if subset.is_some() { "graph" } else { "complete graph on the vertices" })
                .field("closure_size", closed.len())
                .field("added", edges(&added))
                .field("closure", edges(&closed));
            Ok(r)
        }
        Command::Profile { family, nmax } => {
            let (spec, oracle) = parse_family(&family.family)?;
            let p = compute_profile(&oracle, *nmax)?;
            let mut r = Report::new("profile");
            r.family = Some(spec.to_string());
            r.seed = oracle.seed();
            r.cap("nmax", *nmax);
            r.field("d", p.dimensionality.to_string())
                .field("t", p.threshold.to_string())
                .field("exact", p.dimensionality_exact && p.threshold_exact)
                .field("bounded", p.bounded)
                .field("nontrivial", p.nontrivial)
                .field("complete_ranks", json!(p.rank_sequence))
                .field("witness", p.witness_edge_list.as_deref().map_or(Value::Null, edges));
            if let Some(limit) = p.bounded_rank {
                r.field("limit_rank", limit);
            }
            if let Some(known) = spec.documented_profile() {
                r.field("documented", documented(known));
            }
            Ok(r)
        }
        Command::BoundedRank(family) => {
            let (spec, oracle) = parse_family(&family.family)?;
            let mut r = Report::new("bounded-rank");
            r.family = Some(spec.to_string());
            r.seed = oracle.seed();
            r.field("rank", bounded_rank(&oracle)?);
            match small_circuit_min_degree_one(&oracle)? {
                Some(c) => r.field("star_circuit", c.m).field("witness", graph_value(&c.witness)),
                None => r.field("star_circuit", Value::Null),
            };
            Ok(r)
        }
        Command::Vconn { target, k } => {
            let t = load(target)?;
            let mut r = start("vconn", &t);
            r.cap("edges", SEPARATION_EDGE_CAP);
            let separation = match k {
                Some(k) => {
                    let s = find_vertical_separation(&t.oracle, &t.graph, *k)?;
                    r.field("k", *k).field("found", s.is_some());
                    s
                }
                None => {
                    let vc = vertical_connectivity(&t.oracle, &t.graph)?;
                    r.field("rank", vc.rank).field("vertical_connectivity", vc.value);
                    vc.smallest_separation
                }
            };
            if let Some(s) = separation {
                r.field("separation_k", s.k)
                    .field("e1", edges(&s.e1))
                    .field("e2", edges(&s.e2))
                    .field("ranks", json!([s.r1, s.r2, s.r]));
            }
            Ok(r)
        }
        Command::Gconn { graph } => {
            let g = read_graph(graph)?;
            let mut r = Report::new("gconn");
            r.field("vertices", g.vertex_count())
                .field("edges", g.edge_count())
                .field("vertex_connectivity", vertex_connectivity(&g)?);
            Ok(r)
        }
        Command::UnionCheck(args) => {
            let t = load(args)?;
            let FamilySpec::Union { parts } = &t.spec else {
                return Err(Failure::Usage(format!("union-check needs a union(...) family, got {}", t.spec)));
            };
            let oracles = parts.iter().map(Oracle::from_spec).collect::<Result<Vec<_>, _>>()?;
            let mut r = start("union-check", &t);
            let found = union_independent(&oracles, &t.graph)?;
            r.field("independent", found.is_some());
            let partition = match found {
                Some(p) => p,
                None => {
                    let (size, p) = union_rank(&oracles, t.graph.edges())?;
                    r.field("rank", size);
                    p
                }
            };
            let mut table = Table::new(&["part", "family", "edges"]);
            for (i, (part, spec)) in partition.parts.iter().zip(parts).enumerate() {
                table.push(vec![(i + 1).into(), spec.to_string().into(), edges(part)]);
            }
            r.table = Some(table);
            Ok(r)
        }
        Command::Reconstruct { target, extra } => {
            let t = load(target)?;
            let v = is_reconstructible(&t.oracle, &t.graph, *extra)?;
            let mut r = start("reconstruct", &t);
            r.cap("edges", RECONSTRUCTION_EDGE_CAP).cap("extra_vertices", *extra);
            r.field("reconstructible", v.reconstructible)
                .field("horizon", v.horizon)
                .field("hosts_examined", v.hosts_examined);
            if let Some(w) = v.witness {
                let map: Vec<Value> =
                    w.bijection.pairs().iter().map(|(a, b)| json!([[a.u(), a.v()], [b.u(), b.v()]])).collect();
                r.field("witness_host", graph_value(&w.host)).field("witness_map", Value::Array(map));
            }
            Ok(r)
        }
        Command::BridgeWitness(args) => {
            let t = load(args)?;
            let found = bridge_witness(&t.oracle, &t.graph)?;
            let mut r = start("bridge-witness", &t);
            r.field("found", found.is_some());
            if let Some(w) = found {
                r.field("bridge", edges(&[w.bridge]))
                    .field("vertex", w.vertex)
                    .field("g1", graph_value(&w.g1))
                    .field("g2", graph_value(&w.g2));
            }
            Ok(r)
        }
        Command::CheckAxioms { family, nmax, trials, seed } => {
            let (spec, oracle) = parse_family(&family.family)?;
            let m = verify_matroid_axioms(&oracle, *nmax)?;
            let f = verify_family_axioms(&oracle, *trials, *nmax + 1, *seed)?;
            let mut r = Report::new("check-axioms");
            r.family = Some(spec.to_string());
            r.seed = *seed;
            r.cap("nmax", *nmax).cap("trials", *trials);
            r.field("independent_sets", m.independent_sets)
                .field("matroid_violation", serde_json::to_value(&m.violation).expect("serializable"))
                .field("family_violations", f.violations.len());
            if !f.violations.is_empty() {
                r.field("first_family_violation", serde_json::to_value(&f.violations[0]).expect("serializable"));
            }
            r.verdict = Some(if m.passed() && f.passed() { Verdict::Pass } else { Verdict::Fail });
            Ok(r)
        }
        Command::Experiment(args) => suites::run_suite(args),
    }
}

pub fn documented(known: KnownProfile) -> Value {
    match known {
        KnownProfile::Unbounded { d, t } => json!({ "d": d, "t": t }),
        KnownProfile::Bounded { rank } => json!({ "bounded_rank": rank }),
    }
}
