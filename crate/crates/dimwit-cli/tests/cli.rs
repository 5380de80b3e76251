//! End-to-end tests of the `dimwit` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn dimwit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimwit"))
        .args(args)
        .current_dir(dir)
        .env_remove("DIMWIT_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    assert!(
        output.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn write_identity_behaviour(dir: &Path) -> PathBuf {
    let path = dir.join("identity.json");
    std::fs::write(
        &path,
        r#"{"nx": 2, "ny": 1, "nb": 2, "p": [[1.0, 0.0], [0.0, 1.0]]}"#,
    )
    .unwrap();
    path
}

#[test]
fn bound_on_identity_behaviour() {
    let dir = TempDir::new().unwrap();
    write_identity_behaviour(dir.path());
    let out = stdout(&dimwit(dir.path(), &["bound", "identity.json"]));
    assert!(out.contains("trace norm: 2\n"), "{out}");
    assert!(out.contains("raw bound: 2\n"), "{out}");
    assert!(out.contains("dimension lower bound: 2\n"), "{out}");
}

#[test]
fn validate_reports_scenario_and_slack() {
    let dir = TempDir::new().unwrap();
    write_identity_behaviour(dir.path());
    let out = stdout(&dimwit(dir.path(), &["validate", "identity.json"]));
    assert!(out.contains("scenario: |X|=2 |Y|=1 |B|=2"), "{out}");
    assert!(out.contains("max normalization deviation: 0"), "{out}");
}

#[test]
fn invalid_behaviour_exits_one_with_cell_name() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{"nx": 2, "ny": 1, "nb": 2, "p": [[0.5, 0.4], [0.0, 1.0]]}"#,
    )
    .unwrap();
    let out = dimwit(dir.path(), &["validate", "broken.json"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("x=0,y=0"), "{stderr}");
}

#[test]
fn qrac_bound_golden() {
    let dir = TempDir::new().unwrap();
    let out = stdout(&dimwit(
        dir.path(),
        &["qrac", "bound", "--m", "2", "--n", "2", "--dim", "2"],
    ));
    assert_eq!(out, "0.853553391\n");
}

#[test]
fn qrac_bound_notes_the_vacuous_regime() {
    let dir = TempDir::new().unwrap();
    let out = dimwit(
        dir.path(),
        &["qrac", "bound", "--m", "2", "--n", "1", "--dim", "4"],
    );
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("vacuous"));
}

#[test]
fn statedisc_bounds_goldens() {
    let dir = TempDir::new().unwrap();
    let out = stdout(&dimwit(dir.path(), &["statedisc", "bounds", "--N", "4"]));
    assert!(out.contains("B_Q: 6.92820323\n"), "{out}");
    assert!(out.contains("B_C: 6.25179532\n"), "{out}");
    assert!(out.contains("Q_d bound (d=2): 6.92820323\n"), "{out}");
}

#[test]
fn statedisc_bounds_skips_classical_for_odd_n() {
    let dir = TempDir::new().unwrap();
    let out = dimwit(
        dir.path(),
        &["statedisc", "bounds", "--N", "5", "--dim", "3"],
    );
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("B_Q: 10\n"), "{text}");
    assert!(!text.contains("B_C"), "{text}");
    assert!(text.contains("Q_d bound (d=3): 12.2474487\n"), "{text}");
}

#[test]
fn statedisc_pipeline_behaviour_witness_eval() {
    let dir = TempDir::new().unwrap();
    stdout(&dimwit(
        dir.path(),
        &["statedisc", "behaviour", "--N", "4", "-o", "p.json"],
    ));
    let out = stdout(&dimwit(dir.path(), &["bound", "p.json"]));
    assert!(out.contains("trace norm: 6.92820323\n"), "{out}");
    assert!(out.contains("dimension lower bound: 2\n"), "{out}");

    stdout(&dimwit(
        dir.path(),
        &["svd-witness", "p.json", "-o", "g.json"],
    ));
    let out = stdout(&dimwit(
        dir.path(),
        &["witness-eval", "p.json", "g.json", "--dim", "2"],
    ));
    assert!(out.contains("inner product: 6.92820323\n"), "{out}");
    assert!(out.contains("Q_2 bound: 6.92820323\n"), "{out}");
    assert!(out.contains("respected: yes\n"), "{out}");

    let out = stdout(&dimwit(
        dir.path(),
        &["classical-max", "g.json", "--dim", "2"],
    ));
    assert!(
        out.contains("classical maximum (d=2): 6.25179532\n"),
        "{out}"
    );
    assert!(out.contains("\"d\":2"), "{out}");
}

#[test]
fn svd_witness_matches_the_closed_form_witness() {
    let dir = TempDir::new().unwrap();
    stdout(&dimwit(
        dir.path(),
        &["statedisc", "behaviour", "--N", "6", "-o", "p.json"],
    ));
    stdout(&dimwit(
        dir.path(),
        &["svd-witness", "p.json", "-o", "from-svd.json"],
    ));
    stdout(&dimwit(
        dir.path(),
        &["statedisc", "witness", "--N", "6", "-o", "direct.json"],
    ));
    let eval = |witness: &str| {
        let out = stdout(&dimwit(dir.path(), &["witness-eval", "p.json", witness]));
        out.lines().next().unwrap().to_string()
    };
    assert_eq!(eval("from-svd.json"), eval("direct.json"));
}

#[test]
fn classical_max_cap_exits_two() {
    let dir = TempDir::new().unwrap();
    stdout(&dimwit(
        dir.path(),
        &["statedisc", "witness", "--N", "8", "-o", "g.json"],
    ));
    let out = dimwit(
        dir.path(),
        &["classical-max", "g.json", "--dim", "2", "--cap", "10"],
    );
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("256 > 10"), "{stderr}");
}

#[test]
fn figure1_is_deterministic_and_well_formed() {
    let dir = TempDir::new().unwrap();
    let out = stdout(&dimwit(
        dir.path(),
        &["figure1", "--max-n", "20", "-o", "ratios.csv"],
    ));
    assert!(out.contains("asymptotic ratio: 0.905284735\n"), "{out}");
    let first = std::fs::read(dir.path().join("ratios.csv")).unwrap();
    stdout(&dimwit(
        dir.path(),
        &["figure1", "--max-n", "20", "-o", "again.csv"],
    ));
    let second = std::fs::read(dir.path().join("again.csv")).unwrap();
    assert_eq!(first, second);

    let text = String::from_utf8(first).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,B_C,B_Q,ratio"));
    let mut count = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4, "{line}");
        let ratio: f64 = fields[3].parse().unwrap();
        assert!(ratio < 1.0, "{line}");
        count += 1;
    }
    assert_eq!(count, 9); // even N from 4 to 20
    assert!(text.ends_with('\n'));
}

#[test]
fn figure1_rejects_odd_maximum() {
    let dir = TempDir::new().unwrap();
    let out = dimwit(dir.path(), &["figure1", "--max-n", "7", "-o", "r.csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn qrac_artifacts_reload_and_evaluate() {
    let dir = TempDir::new().unwrap();
    for kind in ["matrix", "isometry", "witness"] {
        stdout(&dimwit(
            dir.path(),
            &[
                "qrac",
                kind,
                "--m",
                "2",
                "--n",
                "2",
                "-o",
                &format!("{kind}.json"),
            ],
        ));
    }
    stdout(&dimwit(
        dir.path(),
        &["qrac", "model", "--n", "2", "-o", "model.json"],
    ));

    // the witness scores 3/4 against the best 1-bit strategy
    let out = stdout(&dimwit(
        dir.path(),
        &["classical-max", "witness.json", "--dim", "2"],
    ));
    assert!(out.contains("classical maximum (d=2): 0.75\n"), "{out}");
}

#[test]
fn precision_override_changes_digits() {
    let dir = TempDir::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_dimwit"))
        .args(["qrac", "bound", "--m", "2", "--n", "2", "--dim", "2"])
        .env("DIMWIT_PRECISION", "12")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0.853553390593\n");

    let out = Command::new(env!("CARGO_BIN_EXE_dimwit"))
        .args(["qrac", "bound", "--m", "2", "--n", "2", "--dim", "2"])
        .env("DIMWIT_PRECISION", "42")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DIMWIT_PRECISION"));
}

#[test]
fn missing_file_exits_one() {
    let dir = TempDir::new().unwrap();
    let out = dimwit(dir.path(), &["bound", "nope.json"]);
    assert_eq!(out.status.code(), Some(1));
}
