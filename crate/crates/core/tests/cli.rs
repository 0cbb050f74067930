//! End-to-end runs of the `outerspace` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/v1")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_outerspace")).args(args).env("OUTERSPACE_DATA", data_dir()).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dist_of_identical_files_is_zero() {
    let o = run(&["dist", "graphs/uniform_rose.json", "graphs/uniform_rose.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "d(A,B)\t0\nd(B,A)\t0\nsym\t0\ndiam\t0\n");
}

#[test]
fn dist_of_rose_pair() {
    let o = run(&["dist", "graphs/uniform_rose.json", "graphs/rose_half.json"]);
    let values: Vec<f64> = stdout(&o).lines().map(|l| l.split('\t').nth(1).unwrap().parse().unwrap()).collect();
    assert!((values[0] - 1.5f64.ln()).abs() < 1e-12);
    assert!((values[1] - (4.0f64 / 3.0).ln()).abs() < 1e-12);
}

#[test]
fn malformed_file_names_the_field() {
    let o = run(&["dist", "graphs/uniform_rose.json", "graphs/bad_length.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("length"));
    let o = run(&["validate", "graphs/bad_length.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("Length"));
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"rank\": 3, \"vertices\": [\"v0\"], \"edges\": 5}").unwrap();
    let o = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("edges"));
}

#[test]
fn unknown_command_is_a_usage_error() {
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["candidates", "graphs/theta.json"],
        &["systole", "graphs/barbell.json", "--eps", "1/10"],
        &["project-pl", "graphs/uniform_rose.json"],
        &["axis", "--k-max", "4"],
        &["geodesic", "--samples", "5"],
        &["constants", "--d", "1", "--l", "1", "--eps", "0.1", "--s-eps", "2", "--s-eps-prime", "3"],
        &["validate", "graphs/theta.json", "graphs/stretch_base.json"],
        &["orbit-test", "--gen", "b,c,ab", "--radius", "2"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn constants_reproduce_plug_in_examples() {
    let o = run(&["constants", "--d", "1", "--l", "1", "--eps", "0.1", "--s-eps", "2", "--s-eps-prime", "3"]);
    let text = stdout(&o);
    let value = |name: &str| -> f64 {
        let line = text.lines().find(|l| l.split_whitespace().next() == Some(name)).unwrap();
        line.split_whitespace().nth(1).unwrap().parse().unwrap()
    };
    assert_eq!(value("E"), 10.0);
    assert_eq!(value("4DL"), 4.0);
    assert_eq!(value("D(L+8DL^2+1)"), 10.0);
    assert_eq!(value("L+8DL^2"), 9.0);
    assert!((value("D_eps") - (16.0 * 21f64.ln() + 2.0)).abs() < 1e-9);
}

#[test]
fn constants_without_s_values_name_the_dependency() {
    let o = run(&["constants", "--d", "1", "--l", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("symmetrization constant"));
}

#[test]
fn progress_on_axis_matches_stored_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("progress.csv");
    let o = run(&["progress-test", "--kind", "orbit", "--k-max", "12", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let fixture = std::fs::read_to_string(data_dir().join("fixtures/progress_axis.csv")).unwrap();
    assert_eq!(std::fs::read_to_string(out).unwrap(), fixture);
}

#[test]
fn contraction_csv_is_reproducible() {
    let args = ["contract-test", "--pairs", "40", "--seed", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("pair,construction,cycle,parameter,bound,d_h_path,proj_h,proj_h_prime,diam\n"));
}
