//! End-to-end runs of the compiled binary.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_extremal-animals"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn perimeter_table_matches_known_values() {
    let out = run(&["perimeter", "4", "4", "--upto", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,P\n1,4\n2,6\n3,8\n4,8\n5,10\n");
}

#[test]
fn degseq_raw_prints_the_worked_example() {
    let out = run(&["degseq", "4", "5", "2", "--raw"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "3,3,2,3,2,3,3,2,3,2,3,3,2,3,2,3,3,2,3,2"
    );
    let out = run(&["degseq", "4", "5", "2"]);
    assert!(stdout(&out).starts_with("3x2\n2x1\n"));
}

#[test]
fn extremal_enumeration_reports_five_classes() {
    let out = run(&["enumerate", "4", "5", "9", "--extremal-only"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("extremal classes: 5"), "{}", stdout(&out));
}

#[test]
fn enumerate_cross_checks_reference_csv() {
    let refs = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../extremal-animals/tests/data/reference_counts.csv"
    );
    let out = run(&["enumerate", "4", "4", "8", "--refs", refs]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("8,369,363"), "{text}");
    assert!(text.contains("# cross-checked 8 reference rows"), "{text}");
}

#[test]
fn spiral_params_json_uses_symbol_keys() {
    let out = run(&["--json", "params", "4", "5", "--tiles", "37"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let row = &value["row"];
    assert_eq!(row["m"], "9");
    assert_eq!(row["e1"], "50");
    assert_eq!(row["k"], 2);
}

#[test]
fn invalid_pair_yields_json_error_and_nonzero_exit() {
    let out = bin()
        .args(["--json", "params", "3", "5", "--layers", "2"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert!(err["error"].as_str().unwrap().contains("spherical"));
}

#[test]
fn verify_suite_passes_and_exits_zero() {
    let out = run(&["verify", "4", "5", "--upto", "50"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("[ok]"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn rendering_is_deterministic_and_projection_checked() {
    let dir = std::env::temp_dir();
    let f1 = dir.join("animals-test-a.svg");
    let f2 = dir.join("animals-test-b.svg");
    for f in [&f1, &f2] {
        let out = run(&[
            "render",
            "4",
            "5",
            "--spiral",
            "37",
            "--highlight",
            "saturated",
            "--out",
            f.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&f1).unwrap();
    let b = std::fs::read(&f2).unwrap();
    assert_eq!(a, b, "identical inputs must give byte-identical SVG");
    assert!(String::from_utf8_lossy(&a).starts_with("<svg"));

    // Euclidean animals render in the plane; forcing the disk is an error.
    let out = run(&[
        "render",
        "4",
        "4",
        "--layered",
        "2",
        "--projection",
        "poincare-disk",
        "--out",
        f1.to_str().unwrap(),
    ]);
    assert!(!out.status.success());
}

#[test]
fn ratio_reports_the_conjectured_limit() {
    let out = run(&["ratio", "4", "5", "--upto", "200", "--samples", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("conjectured limit: 1.4226497308"), "{text}");
}
