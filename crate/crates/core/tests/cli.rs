use std::path::Path;
use std::process::{Command, Output};

use ipgp::oracle::{census, census_to_poly};
use ipgp::transfer::PolynomialRecord;
use ipgp::{build_gp, GpParams};

fn ipgp(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ipgp"))
        .args(args)
        .env("IPGP_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_matches_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let o = ipgp(dir.path(), &["compute", "--n", "5", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rec: PolynomialRecord = serde_json::from_str(&stdout(&o)).unwrap();
    let params = GpParams::new(5, 2).unwrap();
    let expected = census_to_poly(&census(&build_gp(params)).unwrap());
    assert_eq!(rec.poly().unwrap(), expected);
    assert_eq!((rec.n, rec.k, rec.alpha), (5, 2, 4));
    assert!(stderr(&o).contains("GP(5,2): degree 4"));
}

#[test]
fn compute_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out/gp.json");
    let o = ipgp(
        dir.path(),
        &[
            "compute",
            "--n",
            "8",
            "--k",
            "3",
            "--out",
            path.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let rec: PolynomialRecord =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rec.coeffs[1], "16");
    assert!(stdout(&o).starts_with("GP(8,3): degree"));
}

#[test]
fn invalid_parameters_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = ipgp(dir.path(), &["compute", "--n", "4", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("require k < n/2"), "{}", stderr(&o));

    let o = ipgp(dir.path(), &["compute", "--n", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("require n >= 3"));

    let o = ipgp(dir.path(), &["compute", "--n", "x", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_small_and_capped() {
    let dir = tempfile::tempdir().unwrap();
    let o = ipgp(dir.path(), &["verify", "--n", "10", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("MATCH GP(10,3): 1 + 20x"));

    let o = ipgp(dir.path(), &["verify", "--n", "20", "--k", "2"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("40"), "{}", stderr(&o));
}

#[test]
fn roots_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let o = ipgp(dir.path(), &["roots", "--n", "5", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,root_index,re,im,residual");
    assert_eq!(lines.len(), 5);
    for (i, line) in lines[1..].iter().enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 6);
        assert_eq!(fields[2], i.to_string());
        assert!(fields[5].parse::<f64>().unwrap() <= 1e-10);
    }

    let csv = dir.path().join("r.csv");
    let svg = dir.path().join("r.svg");
    let o = ipgp(
        dir.path(),
        &[
            "roots",
            "--n",
            "9",
            "--k",
            "2",
            "--csv",
            csv.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("real-rooted false"));
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 8);
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.contains("GP(9,2)"));
}

#[test]
fn sweep_skips_invalid_pairs_and_reports_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep");
    let o = ipgp(
        dir.path(),
        &[
            "sweep",
            "--n",
            "5..12",
            "--k",
            "1,2,3,4",
            "--out",
            out.to_str().unwrap(),
        ],
    );
    // GP(7,3) is real-rooted and GP(9,2) is not, against the parity prediction
    assert_eq!(o.status.code(), Some(10), "{}", stderr(&o));
    let err = stderr(&o);
    assert!(err.contains("notice: skipping (n=5, k=3)"));
    assert!(err.contains("notice: skipping (n=8, k=4)"));
    assert!(stdout(&o).contains("COUNTEREXAMPLE FOUND at (7,3)"));
    let csv = std::fs::read_to_string(out.join("sweep.csv")).unwrap();
    // 8 + 8 + 6 + 4 valid pairs
    assert_eq!(csv.lines().count(), 1 + 26);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("sweep.json")).unwrap()).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 26);
}

#[test]
fn help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = ipgp(dir.path(), &["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sweep"));
    assert!(stderr(&o).is_empty());
    assert_eq!(stdout(&o).matches("Usage:").count(), 1);
}
