//! End-to-end checks of the `ocm` binary: subcommands, file formats, and
//! exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ocm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ocm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn analyze_markdown_reports_reference_means() {
    let out = ocm(&["analyze", &fixture("scc4.graph")]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("887.00"));
    assert!(text.contains("6647.33"));
    assert!(text.contains("43.3"));
    assert!(text.contains("63.5"));
}

#[test]
fn analyze_ground_truth_csv_has_true_values() {
    let out = ocm(&[
        "analyze",
        &fixture("scc4.graph"),
        "--ground-truth",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let data_line = text
        .lines()
        .find(|l| l.starts_with("scc4,"))
        .expect("one data row");
    assert!(data_line.contains("complete"));
    assert!(data_line.contains("19942.00"));
}

#[test]
fn bounds_subcommand_runs_without_enumeration() {
    let out = ocm(&["bounds", &fixture("example18.graph"), "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("skipped"));
    assert_eq!(text.lines().filter(|l| l.starts_with("example18,")).count(), 6);
}

#[test]
fn enumerate_counts_and_dumps() {
    let tmp = tempfile::tempdir().unwrap();
    let dump = tmp.path().join("cycles.txt");
    let out = ocm(&[
        "enumerate",
        &fixture("scc4.graph"),
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total: 6 cycles, complete"));

    let dumped = fs::read_to_string(&dump).unwrap();
    let lines: Vec<&str> = dumped.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l.starts_with("c ")));
    // Self-loop on node 3 with weight 887: `c 887 1 3 3`.
    assert!(lines.contains(&"c 887 1 3 3"));
    // Max-weight cycle 1 -> 3 -> 2 -> 1.
    assert!(lines.contains(&"c 19942 3 1 3 2 1"));
}

#[test]
fn gen_weights_is_deterministic_and_in_range() {
    let tmp = tempfile::tempdir().unwrap();
    let out_a = tmp.path().join("a.graph");
    let out_b = tmp.path().join("b.graph");
    for out_path in [&out_a, &out_b] {
        let out = ocm(&[
            "gen-weights",
            "--dist",
            "lognormal",
            "--min",
            "1",
            "--max",
            "3000",
            "--seed",
            "5",
            &fixture("example18.graph"),
            out_path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = fs::read_to_string(&out_a).unwrap();
    assert_eq!(a, fs::read_to_string(&out_b).unwrap());
    for line in a.lines().filter(|l| l.starts_with("a ")) {
        let w: i64 = line.split_whitespace().nth(3).unwrap().parse().unwrap();
        assert!((1..=3000).contains(&w));
    }
}

#[test]
fn bench_runs_over_directory() {
    let tmp = tempfile::tempdir().unwrap();
    for (i, name) in ["scc3.graph", "scc4.graph"].iter().enumerate() {
        fs::copy(fixture(name), tmp.path().join(format!("t{i}.graph"))).unwrap();
    }
    let run = |seed: &str| {
        let out = ocm(&[
            "bench",
            tmp.path().to_str().unwrap(),
            "--dist",
            "uniform",
            "--seed",
            seed,
        ]);
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let a = run("11");
    let b = run("11");
    assert_eq!(a, b);
    let c = run("12");
    assert_ne!(a, c);
    assert!(a.contains("dist=uniform"));
    assert!(a.contains("seed=11"));
    assert!(a.contains("generator=chacha8"));
}

#[test]
fn fatal_errors_exit_nonzero() {
    let out = ocm(&["analyze", "/nonexistent/file.graph"]);
    assert!(!out.status.success());

    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.graph");
    fs::write(&bad, "p 2 2\na 1 5 3\na 2 1 7\n").unwrap();
    let out = ocm(&["analyze", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("node id 5"), "{err}");
}

#[test]
fn analyze_json_round_trips_through_files() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("report.json");
    let out = ocm(&[
        "analyze",
        &fixture("example18.graph"),
        "--ground-truth",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(Path::new(&path).exists());
    let report = ocm_cli::parse_report(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.graphs.len(), 1);
    assert_eq!(report.graphs[0].records.len(), 6);
}
