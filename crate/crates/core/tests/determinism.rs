use std::fs;
use std::path::Path;

fn run(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["ipgp"];
    argv.extend_from_slice(args);
    let code = ipgp::cli::run(argv, &mut out, &mut err);
    (code, out)
}

fn sweep(cache: &Path, out: &Path, threads: &str) -> (i32, Vec<u8>, Vec<u8>, Vec<u8>) {
    let (code, stdout) = run(&[
        "--cache-dir",
        cache.to_str().unwrap(),
        "--threads",
        threads,
        "sweep",
        "--n",
        "5..16",
        "--k",
        "1,2,3,4",
        "--out",
        out.to_str().unwrap(),
    ]);
    (
        code,
        stdout,
        fs::read(out.join("sweep.csv")).unwrap(),
        fs::read(out.join("sweep.json")).unwrap(),
    )
}

#[test]
fn sweep_is_identical_across_threads_and_cache_state() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cold = sweep(&cache, &dir.path().join("a"), "1");
    let warm = sweep(&cache, &dir.path().join("b"), "4");
    let fresh = sweep(&dir.path().join("other"), &dir.path().join("c"), "3");
    assert_eq!(cold.0, 10);
    assert_eq!(cold, warm);
    assert_eq!(cold, fresh);
}

#[test]
fn compute_and_roots_are_identical_across_threads() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    for cmd in ["compute", "roots"] {
        let outputs: Vec<_> = ["1", "2", "4"]
            .iter()
            .map(|t| {
                run(&[
                    "--cache-dir",
                    cache,
                    "--threads",
                    t,
                    cmd,
                    "--n",
                    "22",
                    "--k",
                    "3",
                ])
            })
            .collect();
        assert_eq!(outputs[0].0, 0);
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{cmd}");
    }
}
