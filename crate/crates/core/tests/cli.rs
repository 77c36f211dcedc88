mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use chromacurv::cli::{run_args, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use chromacurv::generators;
use chromacurv::Graph;

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("chromacurv-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Self(dir)
    }

    fn graph(&self, name: &str, g: &Graph) -> String {
        let p = self.0.join(format!("{name}.json"));
        std::fs::write(&p, g.to_json()).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        std::fs::remove_dir_all(&self.0).ok();
    }
}

fn run(args: &[&str]) -> chromacurv::cli::Outcome {
    run_args(std::iter::once("chromacurv").chain(args.iter().copied()))
}

#[test]
fn gen_writes_graph_json() {
    let out = run(&["gen", "octahedron"]);
    assert_eq!(out.code, EXIT_OK);
    let g = Graph::from_json(&out.stdout).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));

    let out = run(&["gen", "fig6"]);
    assert_eq!(Graph::from_json(&out.stdout).unwrap(), generators::fig6());

    let s = Scratch::new("gen");
    let file = s.path("er.json");
    let out = run(&["gen", "erdos_renyi", "10", "1", "2", "42", "--out", file.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&file).unwrap();
    assert_eq!(written, run(&["gen", "erdos_renyi", "10", "1", "2", "42"]).stdout);
}

#[test]
fn gen_rejects_unknown_names() {
    let out = run(&["gen", "moebius"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("unknown generator"));
    assert_eq!(run(&["gen", "cycle", "2"]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
}

#[test]
fn analyze_house_curvature_column() {
    let s = Scratch::new("house");
    let f = s.graph("house", &generators::house());
    let out = run(&["analyze", &f]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("euler characteristic: 0"));
    let k: Vec<&str> = out
        .stdout
        .lines()
        .skip_while(|l| !l.starts_with("vertex"))
        .skip(1)
        .map(|l| l.split_whitespace().last().unwrap())
        .collect();
    assert_eq!(k, vec!["0", "0", "-1/6", "-1/6", "1/3"]);
}

#[test]
fn analyze_fig6_with_colors() {
    let s = Scratch::new("fig6");
    let f = s.graph("fig6", &generators::fig6());
    let out = run(&["analyze", &f, "--colors", "4"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("richness 3"));
    assert!(out.stdout.contains("E[i_f]=K: OK"));
    assert!(out.stdout.contains("C(4) = 72"));
    assert!(out.stdout.contains("inductive dimension: 568/225 (2.52444)"));

    let json: serde_json::Value =
        serde_json::from_str(&run(&["analyze", &f, "--colors", "4", "--moments", "3", "--json"]).stdout).unwrap();
    assert_eq!(json["coloring"]["richness"], "3");
    assert_eq!(json["coloring"]["global_moments"][0], "0");
    assert_eq!(json["vertices"][4]["curvature"], "-5/12");
    assert_eq!(json["vertices"][4]["moments"][0], "-5/12");
    assert_eq!(json["graph"]["f_vector"], serde_json::json!([10, 25, 18, 3]));
}

#[test]
fn analyze_wheel_sigma_row() {
    let s = Scratch::new("w4");
    let f = s.graph("w4", &generators::wheel(4));
    let json: serde_json::Value =
        serde_json::from_str(&run(&["analyze", &f, "--colors", "3", "--json"]).stdout).unwrap();
    let sigma: Vec<&str> = (0..5).map(|x| json["vertices"][x]["sigma"].as_str().unwrap()).collect();
    // half-even rounding of sqrt(8/9) and sqrt(17/36)
    assert_eq!(sigma, vec!["0.943", "0.687", "0.687", "0.687", "0.687"]);
}

#[test]
fn analyze_rejects_small_color_counts_and_bad_files() {
    let s = Scratch::new("bad");
    let f = s.graph("k3", &generators::complete(3));
    let out = run(&["analyze", &f, "--colors", "2"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("empty probability space"));

    assert_eq!(run(&["analyze", "/nonexistent/graph.json"]).code, EXIT_USAGE);
    let bad = s.path("loop.json");
    std::fs::write(&bad, r#"{"n": 2, "edges": [[0, 0]]}"#).unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("self-loop"));
}

#[test]
fn colorings_listing_formats() {
    let s = Scratch::new("col");
    let octa = s.graph("octa", &generators::octahedron());
    let out = run(&["colorings", &octa, "-c", "3"]);
    let rows: Vec<Vec<u32>> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(out.stderr, "count 6\n");

    let csv = run(&["colorings", &octa, "-c", "3", "--format", "csv"]).stdout;
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "0,1,2,3,4,5");
    assert_eq!(lines.len(), 7);

    let tri = s.graph("tri", &generators::complete(3));
    let out = run(&["colorings", &tri, "-c", "2"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "[]\n");
    assert_eq!(out.stderr, "count 0\n");
}

#[test]
fn colorings_with_indices_match_listing() {
    let s = Scratch::new("idx");
    let f = s.graph("fig6", &generators::fig6());
    let json: serde_json::Value =
        serde_json::from_str(&run(&["colorings", &f, "-c", "4", "--with-indices"]).stdout).unwrap();
    let listing: serde_json::Value = serde_json::from_str(include_str!("data/fig6_listing.json")).unwrap();
    assert_eq!(json["colorings"], listing["colorings"]);
    assert_eq!(json["indices"], listing["index_functions"]);

    let csv = run(&["colorings", &f, "-c", "4", "--format", "csv", "--with-indices"]).stdout;
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "kind,0,1,2,3,4,5,6,7,8,9");
    assert_eq!(lines[1], "coloring,1,2,3,4,3,3,1,2,1,4");
    assert_eq!(lines[73], "index,1,-1,-1,1,-2,-1,1,0,1,1");
    assert_eq!(lines.len(), 1 + 72 + 72);
}

#[test]
fn verify_passes_and_reports_count() {
    let s = Scratch::new("ver");
    let f = s.graph("fig6", &generators::fig6());
    let out = run(&["verify", &f, "--colors", "4"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("72 colorings checked"));
}

#[test]
fn verify_flags_corrupted_curvature() {
    let s = Scratch::new("corrupt");
    let f = s.graph("diamond", &generators::diamond());
    let out = run(&["verify", &f, "--corrupt-curvature", "2"]);
    assert_eq!(out.code, EXIT_VERIFY_FAILED);
    assert!(out.stderr.starts_with("verification failed: gauss-bonnet"));
    assert!(out.stdout.contains("index-expectation     FAIL vertex 2"));
}

#[test]
fn verify_over_registry_and_random_graphs() {
    let s = Scratch::new("registry");
    let mut graphs = common::registry_graphs();
    graphs.extend(
        (0..50u64).map(|i| (format!("gnp{i}"), generators::erdos_renyi(3 + (i % 7) as usize, 1, 2, 77 + i).unwrap())),
    );
    for (name, g) in graphs {
        let f = s.graph(&name.replace(['(', ')'], "_"), &g);
        let out = run(&["verify", &f]);
        assert_eq!(out.code, EXIT_OK, "{name}: {}", out.stdout);
    }
}

fn dot_labels(dot: &str) -> Vec<(u32, i64)> {
    dot.lines()
        .filter_map(|l| l.split_once("[label=\""))
        .map(|(_, rest)| {
            let label = rest.trim_end_matches("\"];");
            let (c, i) = label.split_once('/').unwrap();
            (c.parse().unwrap(), i.parse().unwrap())
        })
        .collect()
}

#[test]
fn dot_output() {
    let s = Scratch::new("dot");
    let diamond = s.graph("diamond", &generators::diamond());
    let out = run(&["dot", &diamond, "-c", "3", "--coloring-row", "0"]);
    assert_eq!(out.code, EXIT_OK);
    let labels = dot_labels(&out.stdout);
    assert_eq!(labels.iter().map(|l| l.1).sum::<i64>(), 1);

    let octa = s.graph("octa", &generators::octahedron());
    let text = run(&["dot", &octa, "-c", "3", "--index", "0"]).stdout;
    assert_eq!(dot_labels(&text).len(), 6);
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 12);
    assert!(text.starts_with("graph G {"));

    let fig6 = s.graph("fig6", &generators::fig6());
    let text = run(&["dot", &fig6, "-c", "4", "--coloring", "1,2,3,4,3,3,1,2,1,4"]).stdout;
    let idx: Vec<i64> = dot_labels(&text).iter().map(|l| l.1).collect();
    assert_eq!(idx, vec![1, -1, -1, 1, -2, -1, 1, 0, 1, 1]);
    // that coloring is the first row
    assert_eq!(text, run(&["dot", &fig6, "-c", "4", "--coloring-row", "0"]).stdout);

    let out = run(&["dot", &diamond, "-c", "3", "--coloring-row", "6"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("out of range"));
    assert_eq!(run(&["dot", &fig6, "-c", "4", "--coloring", "1,1,1,1,1,1,1,1,1,1"]).code, EXIT_USAGE);
}

#[test]
fn stats_histogram() {
    let out = run(&["stats", "--n", "7", "--samples", "40", "--seed", "3", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let total: u64 = json["histogram"].as_array().unwrap().iter().map(|e| e[1].as_u64().unwrap()).sum();
    assert_eq!(total, 40);
    assert_eq!(out.stdout, run(&["stats", "--n", "7", "--samples", "40", "--seed", "3", "--json"]).stdout);
    assert_eq!(out.stdout, run(&["--sequential", "stats", "--n", "7", "--samples", "40", "--seed", "3", "--json"]).stdout);
    assert_eq!(run(&["stats", "--n", "5", "--p-num", "3", "--p-den", "2"]).code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = Path::new(env!("CARGO_BIN_EXE_chromacurv"));
    let status = Command::new(bin).args(["gen", "nope"]).output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_USAGE));
    let out = Command::new(bin).args(["gen", "diamond"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(Graph::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap(), generators::diamond());
    let status = Command::new(bin).arg("--bogus-flag").output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_USAGE));
}
