//! End-to-end runs of the `laclust` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use laclust_cli::{parse_labels, parse_points, write_points};
use tempfile::TempDir;

fn laclust(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laclust")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> Output {
    let out = laclust(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    out
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Writes a planted instance and a corrupted copy of its labels.
fn fixture(dir: &TempDir) -> (PathBuf, PathBuf, PathBuf) {
    let (points, truth, noisy) = (path(dir, "points.csv"), path(dir, "truth.csv"), path(dir, "noisy.csv"));
    ok(&[
        "synth",
        "--k",
        "3",
        "--per-cluster",
        "40",
        "--dim",
        "2",
        "--separation",
        "15",
        "--spread",
        "1",
        "--seed",
        "4",
        "--out-points",
        s(&points),
        "--out-labels",
        s(&truth),
    ]);
    ok(&[
        "corrupt",
        "--points",
        s(&points),
        "--labels",
        s(&truth),
        "--alpha",
        "0.2",
        "--seed",
        "4",
        "--out",
        s(&noisy),
    ]);
    (points, truth, noisy)
}

#[test]
fn synth_round_trips_exactly() {
    let dir = TempDir::new().unwrap();
    let (points, truth, noisy) = fixture(&dir);
    let data = parse_points(&points, false).unwrap();
    assert_eq!((data.len(), data.dim()), (120, 2));
    assert_eq!(parse_labels(&truth, false, None).unwrap().k(), 3);

    let copy = path(&dir, "copy.csv");
    write_points(&copy, &data).unwrap();
    let again = parse_points(&copy, false).unwrap();
    let bits = |d: &laclust::Dataset| d.as_slice().iter().map(|v| v.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(&data), bits(&again));

    let moved = parse_labels(&truth, false, None)
        .unwrap()
        .as_slice()
        .iter()
        .zip(parse_labels(&noisy, false, None).unwrap().as_slice())
        .filter(|(a, b)| a != b)
        .count();
    assert_eq!(moved, 3 * 8);
}

#[test]
fn run_report_fields_and_determinism() {
    let dir = TempDir::new().unwrap();
    let (points, truth, noisy) = fixture(&dir);
    let (a, b) = (path(&dir, "a.json"), path(&dir, "b.json"));
    for out in [&a, &b] {
        ok(&[
            "run",
            "--algo",
            "la-kmedians",
            "--points",
            s(&points),
            "--labels",
            s(&noisy),
            "--truth",
            s(&truth),
            "--alpha",
            "0.2",
            "--rounds",
            "auto",
            "--seed",
            "9",
            "--out",
            s(out),
        ]);
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());

    let keys = [
        "algo",
        "alpha",
        "k",
        "seed",
        "cost_vs_truth",
        "cost_min_assign",
        "factor_bound",
        "centers",
        "wall_ms",
        "config",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "field order {positions:?}");

    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["algo"], "la-kmedians");
    assert_eq!(v["k"], 3);
    assert_eq!(v["centers"].as_array().unwrap().len(), 3);
    assert!(v["wall_ms"].is_null());
    assert!(v["config"]["rounds"].is_null());
    let (truth_cost, assigned) = (v["cost_vs_truth"].as_f64().unwrap(), v["cost_min_assign"].as_f64().unwrap());
    assert!(assigned <= truth_cost * (1.0 + 1e-9));
}

#[test]
fn run_without_truth_to_stdout() {
    let dir = TempDir::new().unwrap();
    let (points, _, noisy) = fixture(&dir);
    let out = ok(&[
        "run",
        "--algo",
        "la-kmeans",
        "--points",
        s(&points),
        "--labels",
        s(&noisy),
        "--alpha",
        "0.2",
        "--timing",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["cost_vs_truth"].is_null());
    assert!(v["wall_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn sweep_and_trials() {
    let dir = TempDir::new().unwrap();
    let (points, truth, noisy) = fixture(&dir);
    let (sweep, table, trials) = (path(&dir, "sweep.json"), path(&dir, "sweep.csv"), path(&dir, "trials.json"));
    ok(&[
        "sweep",
        "--algo",
        "la-kmeans",
        "--points",
        s(&points),
        "--labels",
        s(&noisy),
        "--truth",
        s(&truth),
        "--grid",
        "5",
        "--out",
        s(&sweep),
        "--table",
        s(&table),
    ]);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&sweep).unwrap()).unwrap();
    let rows = v["table"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let best = v["best"]["cost_min_assign"].as_f64().unwrap();
    assert!(rows.iter().all(|r| best <= r["cost_min_assign"].as_f64().unwrap()));
    assert_eq!(fs::read_to_string(&table).unwrap().lines().count(), 6);

    ok(&[
        "trials",
        "--algo",
        "la-kmeans,predictor-naive",
        "--runs",
        "4",
        "--alpha",
        "0.2",
        "--points",
        s(&points),
        "--labels",
        s(&noisy),
        "--truth",
        s(&truth),
        "--out",
        s(&trials),
    ]);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&trials).unwrap()).unwrap();
    assert_eq!(v[0]["algo"], "la-kmeans");
    assert_eq!(v[0]["runs"], 4);
    assert_eq!(v[0]["std_dev"].as_f64(), Some(0.0));
    assert_eq!(v[1]["algo"], "predictor-naive");
}

#[test]
fn label_equal_to_k_is_rejected() {
    let dir = TempDir::new().unwrap();
    let (points, _, _) = fixture(&dir);
    let labels = path(&dir, "bad.csv");
    let mut rows = vec!["0"; 119];
    rows.push("3");
    fs::write(&labels, rows.join("\n")).unwrap();
    let out = laclust(&[
        "run",
        "--algo",
        "la-kmeans",
        "--points",
        s(&points),
        "--labels",
        s(&labels),
        "--k",
        "3",
        "--alpha",
        "0.1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":120:1:"), "{err}");
}

#[test]
fn empty_points_file_is_a_validation_error() {
    let dir = TempDir::new().unwrap();
    let empty = path(&dir, "empty.csv");
    fs::write(&empty, "").unwrap();
    let out = laclust(&["run", "--algo", "la-kmeans", "--points", s(&empty), "--labels", s(&empty), "--alpha", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_input_is_an_io_error() {
    let out = laclust(&[
        "run",
        "--algo",
        "la-kmeans",
        "--points",
        "/no/such/file.csv",
        "--labels",
        "/no/such/l.csv",
        "--alpha",
        "0.1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_alpha_is_a_validation_error() {
    let dir = TempDir::new().unwrap();
    let (points, _, noisy) = fixture(&dir);
    let out = laclust(&["run", "--algo", "la-kmeans", "--points", s(&points), "--labels", s(&noisy), "--alpha", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}
