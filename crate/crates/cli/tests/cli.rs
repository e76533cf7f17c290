use std::path::PathBuf;
use std::process::Command;

use gmf_cli::run_command;
use serde_json::Value;

/// Writes an edge list under the target temp dir and returns its path.
fn graph_file(name: &str, edges: &[(u32, u32)]) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("gmf-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let text: String = edges.iter().map(|(a, b)| format!("{a} {b}\n")).collect();
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn complete(n: u32) -> Vec<(u32, u32)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = run_command(std::iter::once("gmf").chain(args.iter().copied()));
    (out.code, out.stdout)
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "--no-timing"]);
    let (code, stdout) = run(&all);
    (code, serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}")))
}

#[test]
fn rank_of_k4_in_the_two_three_count_family() {
    let k4 = graph_file("k4.edges", &complete(4));
    let (code, v) = json(&["rank", "--family", "count:k=2,l=3", "--graph", &k4]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["rank"], 5);
    assert_eq!(v["result"]["basis"].as_array().unwrap().len(), 5);
    let (code, text) = run(&["rank", "--family", "count:k=2,l=3", "--graph", &k4]);
    assert_eq!(code, 0);
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["rank", "5"]), "{text}");
}

#[test]
fn bicircular_profile() {
    let (code, v) = json(&["profile", "--family", "bicircular", "--nmax", "6"]);
    assert_eq!(code, 0);
    assert_eq!((v["result"]["d"].as_str(), v["result"]["t"].as_str()), (Some("1"), Some("3")));
    assert_eq!(v["result"]["exact"], true);
}

#[test]
fn reports_embed_provenance() {
    let (_, v) = json(&["experiment", "rank-linearity", "--family", "graphic", "--nmax", "8", "--seed", "11"]);
    assert_eq!(v["tool"], "gmf");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["family"], "graphic");
    assert_eq!(v["seed"], 11);
    assert_eq!(v["caps"]["nmax"], 8);
    assert!(v["wall_time_s"].is_null());
    let (_, timed) = run(&["experiment", "rank-linearity", "--family", "graphic", "--json"]);
    let timed: Value = serde_json::from_str(&timed).unwrap();
    assert!(timed["wall_time_s"].as_f64().is_some());
}

#[test]
fn rank_linearity_suite_passes_for_graphic() {
    let (code, v) = json(&["experiment", "rank-linearity", "--family", "graphic", "--nmax", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    let ranks: Vec<u64> =
        v["rows"][0]["complete_ranks"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(ranks, (1..=7).collect::<Vec<u64>>());
}

/// Reads the threshold off the computed rank sequence of complete graphs.
#[test]
fn count_threshold_rows_agree_with_rank_increments() {
    let (code, v) = json(&["experiment", "count-thresholds"]);
    assert_eq!(code, 0, "{v}");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        let l = row["l"].as_i64().unwrap();
        let (_, p) = json(&["profile", "--family", &format!("count:k=2,l={l}"), "--nmax", "8"]);
        let ranks: Vec<u64> =
            p["result"]["complete_ranks"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        // ranks[n - 1] = r(K_n); t is the first n > k from which r(K_n) = kn - l.
        let linear = |n: usize| ranks[n - 1] as i64 == 2 * n as i64 - l;
        let t = (3..=ranks.len()).find(|&t| (t..=ranks.len()).all(linear)).unwrap();
        assert_eq!(row["t"].as_str().unwrap(), t.to_string(), "l = {l}");
        assert_eq!(row["formula_t"].as_u64().unwrap() as usize, t, "l = {l}");
    }
}

#[test]
fn counterexample_suite_exit_codes() {
    let (code, v) = json(&["experiment", "even-cycle-not-1extendable"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["rows"][0]["graph"].as_array().unwrap().len(), 3);
    assert_eq!(v["rows"][0]["split"].as_array().unwrap().len(), 4);
    let (code, _) = json(&["experiment", "even-cycle-not-1extendable", "--expect-counterexample"]);
    assert_eq!(code, 0);
    let (code, _) = json(&["experiment", "rank-linearity", "--family", "graphic", "--expect-counterexample"]);
    assert_eq!(code, 1);
}

#[test]
fn documented_exceptions_keep_the_full_suite_passing() {
    let (code, v) = json(&["experiment", "one-extendability", "--trials", "20"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["counterexamples"], 1);
    let even = v["rows"].as_array().unwrap().iter().find(|r| r["family"] == "even-cycle").unwrap();
    assert_eq!(even["outcome"], "counterexample");
    assert_eq!(even["expected"], "counterexample");
}

#[test]
fn light_suites_pass() {
    for suite in ["graphic-vertical-conn", "union-threshold", "whitney-twist", "vertex-addition-bridges"] {
        let (code, v) = json(&["experiment", suite]);
        assert_eq!(code, 0, "{suite}: {v}");
        assert_eq!(v["result"]["counterexamples"], 0, "{suite}");
    }
    let (code, _) = json(&["experiment", "bridge-witness", "--nmax", "5"]);
    assert_eq!(code, 0);
    let (code, _) = json(&["experiment", "prop35-harness", "--family", "graphic", "--nmax", "5"]);
    assert_eq!(code, 0);
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let args = ["experiment", "prop36-harness", "--nmax", "5", "--json", "--no-timing"];
    let (c1, a) = run(&args);
    let (c2, b) = run(&args);
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "3"]);
    let (c3, c) = run(&parallel);
    assert_eq!((c1, c2, c3), (0, 0, 0));
    assert_eq!(a, b);
    assert_eq!(a, c);
    let text = ["experiment", "one-extendability", "--trials", "10", "--seed", "5"];
    assert_eq!(run(&text), run(&text));
}

#[test]
fn usage_and_limit_exit_codes() {
    let k4 = graph_file("k4-usage.edges", &complete(4));
    assert_eq!(run(&["experiment", "no-such-suite"]).0, 2);
    assert_eq!(run(&["rank", "--family", "count:k=2", "--graph", &k4]).0, 2);
    assert_eq!(run(&["rank", "--family", "graphic", "--graph", "/nonexistent/g.edges"]).0, 2);
    assert_eq!(run(&["rank", "--family", "graphic"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--jobs", "0", "gconn", "--graph", &k4]).0, 2);
    assert_eq!(run(&["profile", "--family", "graphic", "--nmax", "9"]).0, 3);
    let k5 = graph_file("k5.edges", &complete(5));
    assert_eq!(run(&["reconstruct", "--family", "graphic", "--graph", &k5]).0, 3);
    let (code, help) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(help.contains("experiment"));
    let bad = graph_file("bad.edges", &[(0, 0)]);
    let out = run_command(["gmf", "gconn", "--graph", &bad, "--json"]);
    assert_eq!(out.code, 2);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["exit_code"], 2);
    assert!(out.stderr.contains("loop"));
}

#[test]
fn single_graph_commands() {
    let k4 = graph_file("k4-single.edges", &complete(4));
    let k5 = graph_file("k5-single.edges", &complete(5));
    let path = graph_file("path.edges", &[(0, 1), (1, 2)]);
    let bowtie = graph_file("bowtie.edges", &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
    let lollipop = graph_file("lollipop.edges", &[(0, 1), (1, 2), (0, 2), (2, 3)]);
    let twins = graph_file("twins.edges", &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);

    let (_, v) = json(&["rigid", "--family", "rigidity:d=2", "--graph", &k4]);
    assert_eq!((v["result"]["rigid"].as_bool(), v["result"]["rank"].as_u64()), (Some(true), Some(5)));
    let (_, v) = json(&["circuits", "--family", "graphic", "--graph", &k4]);
    assert_eq!(v["result"]["count"], 7);
    let (_, v) = json(&["bridges", "--family", "graphic", "--graph", &lollipop]);
    assert_eq!(v["result"]["bridges"], serde_json::json!([[2, 3]]));
    let (_, v) = json(&["closure", "--family", "graphic", "--graph", &path]);
    assert_eq!(v["result"]["added"], serde_json::json!([[0, 2]]));
    let (_, v) = json(&["vconn", "--family", "graphic", "--graph", &bowtie]);
    assert_eq!(v["result"]["vertical_connectivity"], 1);
    assert_eq!(v["result"]["e1"].as_array().unwrap().len(), 3);
    let (_, v) = json(&["gconn", "--graph", &k4]);
    assert_eq!(v["result"]["vertex_connectivity"], 3);
    let (_, v) = json(&["union-check", "--family", "union(graphic;graphic)", "--graph", &k4]);
    assert_eq!(v["result"]["independent"], true);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["edges"].as_array().unwrap().len() == 3));
    let (_, v) = json(&["union-check", "--family", "union(graphic;graphic)", "--graph", &k5]);
    assert_eq!((v["result"]["independent"].as_bool(), v["result"]["rank"].as_u64()), (Some(false), Some(8)));
    assert_eq!(run(&["union-check", "--family", "graphic", "--graph", &k4]).0, 2);
    let (_, v) = json(&["reconstruct", "--family", "graphic", "--graph", &twins]);
    assert_eq!(v["result"]["reconstructible"], false);
    assert_eq!(v["result"]["witness_host"].as_array().unwrap().len(), 6);
    let (_, v) = json(&["reconstruct", "--family", "graphic", "--graph", &k4]);
    assert_eq!(v["result"]["reconstructible"], true);
    let (_, v) = json(&["bridge-witness", "--family", "graphic", "--graph", &path]);
    assert_eq!(v["result"]["found"], true);
    let (_, v) = json(&["bounded-rank", "--family", "uniform:k=3"]);
    assert_eq!(v["result"]["rank"], 3);
    let (code, v) = json(&["check-axioms", "--family", "bicircular", "--trials", "50", "--seed", "3"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("pass")));
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gmf");
    let k4 = graph_file("k4-bin.edges", &complete(4));
    let ok = Command::new(bin).args(["rank", "--family", "count:k=2,l=3", "--graph", &k4]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("rank      5"));
    let fail = Command::new(bin).args(["experiment", "even-cycle-not-1extendable"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = Command::new(bin).args(["experiment"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
