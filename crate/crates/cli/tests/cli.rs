//! End-to-end behavior of the `gaussbound` binary: exit codes, output
//! shapes, determinism, and the file-format invariants.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gaussbound::statefile::{Builder, StateFile};
use tempfile::TempDir;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_gaussbound")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn builder_file(dir: &Path, name: &str, builder: Builder) -> PathBuf {
    let file = StateFile {
        schema_version: "1".into(),
        n: None,
        mean: None,
        cov: None,
        builder: Some(builder),
    };
    write_file(dir, name, &serde_json::to_string_pretty(&file).unwrap())
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn validate_accepts_vacuum() {
    let dir = TempDir::new().unwrap();
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let out = run(&["validate", vac.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("valid"));
}

#[test]
fn validate_rejects_sub_vacuum_covariance() {
    let dir = TempDir::new().unwrap();
    let bad = write_file(
        dir.path(),
        "bad.json",
        r#"{"schema_version":"1","n":1,"mean":[0.0,0.0],"cov":[[0.5,0.0],[0.0,0.5]]}"#,
    );
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let err = stderr(&out);
    assert!(err.contains("0.500000000") && err.contains("< 1"), "{err}");
}

#[test]
fn validate_reports_asymmetry() {
    let dir = TempDir::new().unwrap();
    let bad = write_file(
        dir.path(),
        "asym.json",
        r#"{"schema_version":"1","n":1,"mean":[0.0,0.0],"cov":[[1.0,0.3],[0.0,1.0]]}"#,
    );
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("asymmetric"), "{}", stderr(&out));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = TempDir::new().unwrap();
    let garbled = write_file(
        dir.path(),
        "garbled.json",
        "{\n  \"schema_version\": oops\n}",
    );
    let out = run(&["validate", garbled.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["validate", "/nonexistent/state.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn spectrum_prints_descending_values() {
    let dir = TempDir::new().unwrap();
    let th = builder_file(dir.path(), "th.json", Builder::Thermal { nu: vec![3.0] });
    let out = run(&["spectrum", th.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next().unwrap(), "3.000000000");

    let tmsv = builder_file(dir.path(), "tmsv.json", Builder::TwoModeSqueezed { r: 0.6 });
    let out = run(&["spectrum", tmsv.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "1.000000000 1.000000000"
    );
}

#[test]
fn spectrum_full_dumps_factor_with_residuals() {
    let dir = TempDir::new().unwrap();
    let sq = builder_file(dir.path(), "sq.json", Builder::Squeezed { r: 0.5 });
    let out = run(&["spectrum", sq.to_str().unwrap(), "--full"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("S ="), "{text}");
    assert!(text.contains("residual |S Omega S^T - Omega|"), "{text}");
}

#[test]
fn spectrum_rejects_invalid_state() {
    let dir = TempDir::new().unwrap();
    let bad = write_file(
        dir.path(),
        "bad.json",
        r#"{"schema_version":"1","n":1,"mean":[0.0,0.0],"cov":[[0.4,0.0],[0.0,0.4]]}"#,
    );
    let out = run(&["spectrum", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

fn json_value(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("valid JSON output")
}

#[test]
fn discriminate_json_values_on_reference_pair() {
    let dir = TempDir::new().unwrap();
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let th = builder_file(dir.path(), "th.json", Builder::Thermal { nu: vec![2.0] });
    let out = run(&[
        "discriminate",
        vac.to_str().unwrap(),
        th.to_str().unwrap(),
        "--format",
        "json",
        "--oracle",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json_value(&stdout(&out));
    let close = |x: f64, want: f64| (x - want).abs() < 1e-9;
    assert!(close(v["minkowski"]["value"].as_f64().unwrap(), 1.0 / 3.0));
    assert!(close(
        v["young"]["value"].as_f64().unwrap(),
        0.25f64.sqrt() / 2.0f64.sqrt()
    ));
    assert!(close(v["fidelity"]["f"].as_f64().unwrap(), 2.0 / 3.0));
    assert!(close(v["helstrom"].as_f64().unwrap(), 1.0 / 3.0));
    assert!(close(v["chernoff"]["value"].as_f64().unwrap(), 1.0 / 3.0));
}

#[test]
fn discriminate_copy_scaling() {
    let dir = TempDir::new().unwrap();
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let th = builder_file(dir.path(), "th.json", Builder::Thermal { nu: vec![2.0] });
    let out = run(&[
        "discriminate",
        vac.to_str().unwrap(),
        th.to_str().unwrap(),
        "--copies",
        "3",
        "--format",
        "json",
    ]);
    let v = json_value(&stdout(&out));
    let want = 0.5 * (2.0f64 / 3.0).powi(3);
    assert!((v["chernoff"]["value"].as_f64().unwrap() - want).abs() < 1e-10);
}

#[test]
fn discriminate_identical_states_all_half() {
    let dir = TempDir::new().unwrap();
    let th = builder_file(dir.path(), "th.json", Builder::Thermal { nu: vec![2.0] });
    let out = run(&[
        "discriminate",
        th.to_str().unwrap(),
        th.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v = json_value(&stdout(&out));
    for key in ["chernoff", "minkowski", "young"] {
        assert!(
            (v[key]["value"].as_f64().unwrap() - 0.5).abs() < 1e-10,
            "{key}"
        );
    }
    assert!((v["bhattacharyya"].as_f64().unwrap() - 0.5).abs() < 1e-10);
}

#[test]
fn discriminate_rejects_mode_mismatch() {
    let dir = TempDir::new().unwrap();
    let one = builder_file(dir.path(), "one.json", Builder::Vacuum { n: 1 });
    let two = builder_file(dir.path(), "two.json", Builder::Vacuum { n: 2 });
    let out = run(&["discriminate", one.to_str().unwrap(), two.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(
        stderr(&out).contains("mode count mismatch"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn oracle_flag_rejects_unsupported_pair() {
    let dir = TempDir::new().unwrap();
    let sq = builder_file(dir.path(), "sq.json", Builder::Squeezed { r: 0.4 });
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let out = run(&[
        "discriminate",
        sq.to_str().unwrap(),
        vac.to_str().unwrap(),
        "--oracle",
    ]);
    assert_eq!(code(&out), 1);
    assert!(
        stderr(&out).contains("unsupported pair"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn bounds_selector_filters_output() {
    let dir = TempDir::new().unwrap();
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let th = builder_file(dir.path(), "th.json", Builder::Thermal { nu: vec![3.0] });
    let out = run(&[
        "discriminate",
        vac.to_str().unwrap(),
        th.to_str().unwrap(),
        "--bounds",
        "mink,young",
        "--format",
        "json",
    ]);
    let v = json_value(&stdout(&out));
    assert!(v.get("minkowski").is_some() && v.get("young").is_some());
    assert!(v.get("chernoff").is_none() && v.get("fidelity").is_none());

    let out = run(&[
        "discriminate",
        vac.to_str().unwrap(),
        th.to_str().unwrap(),
        "--bounds",
        "nonsense",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = builder_file(
        dir.path(),
        "a.json",
        Builder::Thermal { nu: vec![1.5, 4.0] },
    );
    let b = builder_file(
        dir.path(),
        "b.json",
        Builder::Thermal { nu: vec![2.0, 3.0] },
    );
    let args = [
        "discriminate",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--copies",
        "5",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(code(&first), 0);
}

#[test]
fn builder_and_explicit_files_agree() {
    let dir = TempDir::new().unwrap();
    let built = builder_file(dir.path(), "built.json", Builder::Thermal { nu: vec![2.0] });
    // expand the same state into explicit moments
    let state = Builder::Thermal { nu: vec![2.0] }.build().unwrap();
    let explicit_file = StateFile::from_state(&state);
    let explicit = write_file(
        dir.path(),
        "explicit.json",
        &serde_json::to_string_pretty(&explicit_file).unwrap(),
    );
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let from_builder = run(&[
        "discriminate",
        vac.to_str().unwrap(),
        built.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let from_explicit = run(&[
        "discriminate",
        vac.to_str().unwrap(),
        explicit.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(from_builder.stdout, from_explicit.stdout);
}

#[test]
fn state_file_round_trip_is_tight() {
    let dir = TempDir::new().unwrap();
    let state = Builder::TwoModeSqueezed { r: 0.83 }.build().unwrap();
    let path = dir.path().join("state.json");
    StateFile::from_state(&state).save(&path).unwrap();
    let back = StateFile::load(&path).unwrap().to_state().unwrap();
    assert!(gaussbound_core::states::states_close(&state, &back, 1e-12));
}

#[test]
fn grid_env_override_is_honored() {
    let dir = TempDir::new().unwrap();
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let th = builder_file(dir.path(), "th.json", Builder::Thermal { nu: vec![2.0] });
    let ok = Command::new(bin())
        .args(["discriminate", vac.to_str().unwrap(), th.to_str().unwrap()])
        .env("GAUSSBOUND_GRID", "51")
        .output()
        .unwrap();
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));

    let bad = Command::new(bin())
        .args(["discriminate", vac.to_str().unwrap(), th.to_str().unwrap()])
        .env("GAUSSBOUND_GRID", "many")
        .output()
        .unwrap();
    assert_eq!(code(&bad), 2);
}

#[test]
fn sweep_unknown_family_exits_two_listing_families() {
    let dir = TempDir::new().unwrap();
    let spec = write_file(
        dir.path(),
        "spec.json",
        r#"{
            "family": "mystery",
            "parameter": {"name": "x", "start": 1.0, "stop": 2.0, "steps": 3},
            "output": "out.csv"
        }"#,
    );
    let out = run(&["sweep", spec.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("vacuum_vs_thermal"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn sweep_writes_ordered_csv() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("sweep.csv");
    let spec = write_file(
        dir.path(),
        "spec.json",
        &format!(
            r#"{{
                "family": "vacuum_vs_thermal",
                "parameter": {{"name": "beta", "start": 1.0, "stop": 4.0, "steps": 4}},
                "output": "{}"
            }}"#,
            out_path.display()
        ),
    );
    let out = run(&["sweep", spec.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let csv = std::fs::read_to_string(&out_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "param,Y1,M1,PQC1,F_plus,F_minus");
    assert_eq!(lines.len(), 5);
    // parameters ascend; the identical-state row is the half plateau
    assert!(lines[1].starts_with("1.000000000,0.500000000,0.500000000,0.500000000"));
    let params: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(params.windows(2).all(|w| w[0] < w[1]));
    // consistency with discriminate on the same pair
    let vac = builder_file(dir.path(), "vac.json", Builder::Vacuum { n: 1 });
    let th = builder_file(dir.path(), "th2.json", Builder::Thermal { nu: vec![2.0] });
    let single = run(&[
        "discriminate",
        vac.to_str().unwrap(),
        th.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v = json_value(&stdout(&single));
    let row: Vec<&str> = lines[2].split(',').collect();
    let y_csv: f64 = row[1].parse().unwrap();
    assert!((y_csv - v["young"]["value"].as_f64().unwrap()).abs() < 1e-9);
}
