use std::path::Path;
use std::process::Command;

use parahitchin_cli::{execute, Report, RunOptions, Status};

const G2N2: &str = r#"
curve_f = [1, -1, 0, 0, 0, 1]
marked_points = [[0, 1], [1, 1]]
lambda = [1, 3]
samples = 6
centrality_degree = 2
zero_mode_bound = 1
singular_max_degree = 4
truncation_depths = [0, 1]
"#;

fn write(dir: &Path, name: &str, body: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_parahitchin"))
}

fn with_suites(body: &str, suites: &[&str]) -> String {
    let list: Vec<String> = suites.iter().map(|s| format!("{s:?}")).collect();
    format!("{body}\nsuites = [{}]\n", list.join(", "))
}

#[test]
fn dims_suite_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", &with_suites(G2N2, &["dims"]));
    let r = execute(
        &cfg,
        &RunOptions {
            output: Some(dir.path().join("r.json")),
            ..Default::default()
        },
    )
    .unwrap();
    let d = r.suite("dims").unwrap();
    assert_eq!(d.status, Status::Pass);
    assert_eq!(d.values["base_dim"], 5);
    assert_eq!(d.values["spectral_genus"], 7);
    assert_eq!(d.values["prym_dim"], 5);
    for c in &d.checks {
        assert!(!c.lhs.is_empty() && !c.rhs.is_empty());
    }
}

#[test]
fn sugawara_eigenvalue_two() {
    let dir = tempfile::tempdir().unwrap();
    let body =
        "curve_f = [1, -1, 0, 0, 0, 1]\nmarked_points = [[0, 1]]\nlambda = [2]\nsuites = [\"sugawara\"]\n";
    let cfg = write(dir.path(), "c.toml", body);
    let r = execute(
        &cfg,
        &RunOptions {
            output: Some(dir.path().join("r.json")),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(
        r.suite("sugawara").unwrap().values["eigenvalues"],
        serde_json::json!(["2"])
    );
}

#[test]
fn empty_suite_list() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", G2N2);
    let out = dir.path().join("r.json");
    let status = bin().args(["-c"]).arg(&cfg).arg("-o").arg(&out).status().unwrap();
    assert_eq!(status.code(), Some(0));
    let r: Report = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert!(r.suites.is_empty());
}

#[test]
fn invalid_configs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = [
        // point not on the curve
        "curve_f = [1, -1, 0, 0, 0, 1]\nmarked_points = [[0, 2]]\nlambda = [1]\n",
        // lambda length mismatch
        "curve_f = [1, -1, 0, 0, 0, 1]\nmarked_points = [[0, 1]]\nlambda = [1, 2]\n",
        // f not squarefree
        "curve_f = [0, 0, 1, 1]\nmarked_points = [[1, 1]]\nlambda = [1]\n",
        // unknown suite
        "curve_f = [1, -1, 0, 0, 0, 1]\nmarked_points = [[0, 1]]\nlambda = [1]\nsuites = [\"nope\"]\n",
        "not toml at all [",
    ];
    for (i, body) in bad.iter().enumerate() {
        let cfg = write(dir.path(), &format!("bad{i}.toml"), body);
        let status = bin().arg("-c").arg(&cfg).status().unwrap();
        assert_eq!(status.code(), Some(2), "config {i}");
    }
    let status = bin()
        .arg("-c")
        .arg(dir.path().join("missing.toml"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn suite_flag_and_seed_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", &with_suites(G2N2, &["dims"]));
    let out = dir.path().join("r.json");
    let status = bin()
        .arg("-c")
        .arg(&cfg)
        .arg("-o")
        .arg(&out)
        .args(["--suite", "bridge", "--suite", "spectral", "--seed", "42"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let r: Report = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let names: Vec<&str> = r.suites.iter().map(|s| s.name.as_str()).collect();
    assert_eq!(names, ["spectral", "bridge"]);
    assert_eq!(r.seed, 42);
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.toml",
        &with_suites(G2N2, &["hitchin", "spectral", "admissibility"]),
    );
    let run = || {
        execute(
            &cfg,
            &RunOptions {
                output: Some(dir.path().join("r.json")),
                ..Default::default()
            },
        )
        .unwrap()
        .without_timings()
    };
    assert_eq!(run(), run());
}

#[test]
fn admissibility_without_depths_is_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let body = "curve_f = [1, -1, 0, 0, 0, 1]\nmarked_points = [[0, 1]]\nlambda = [1]\ntruncation_depths = []\nsuites = [\"admissibility\"]\n";
    let cfg = write(dir.path(), "c.toml", body);
    let r = execute(
        &cfg,
        &RunOptions {
            output: Some(dir.path().join("r.json")),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(r.suite("admissibility").unwrap().status, Status::Skipped);
}
