//! End-to-end tests of the command-line contract: exit codes, builtin
//! fixtures, bundle files and byte-stable JSON reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ltsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("ltsys-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn verify_builtin_b2_passes() {
    let out = ltsys(&["verify", "lts", "builtin:b2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ok"));
}

#[test]
fn verify_identity_operator_fails_with_witness() {
    let out = ltsys(&["verify", "rb", "builtin:b2-id-op"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("violation"));
    assert!(text.contains("rb at ("));
}

#[test]
fn relative_check_agrees_with_square_check_on_families() {
    for fixture in ["b2-family1", "b2-family2", "b2-zero-op"] {
        let out = ltsys(&["verify", "relative-rb", "--fixture", fixture]);
        assert_eq!(out.status.code(), Some(0), "{fixture}");
    }
    let out = ltsys(&["verify", "relative-rb", "--fixture", "b2-id-op"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_json_is_a_usage_error() {
    let path = temp_path("malformed.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = ltsys(&["verify", "lts", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn unknown_fixture_is_a_usage_error() {
    let out = ltsys(&["verify", "lts", "--fixture", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown builtin"));
}

#[test]
fn missing_section_is_a_usage_error() {
    let out = ltsys(&["cohomology", "--fixture", "b2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cohomology_of_zero_operator() {
    let out = ltsys(&["cohomology", "--fixture", "b2-zero-op"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("h1 = 4"));
    assert!(text.contains("complex_ok = true"));
}

#[test]
fn cohomology_names_the_broken_representation_identity() {
    // The adjoint action table of the builtin system, written out explicitly
    // with one corrupted entry in the slot-1 action at (e2,e2).
    let bundle = serde_json::json!({
        "lts": {
            "kind": "lts", "dim": 2,
            "products": [
                {"args": [1, 2, 2], "value": [[1, "1"]]},
                {"args": [2, 2, 2], "value": [[1, "1"]]},
            ],
        },
        "representation": {
            "kind": "lts-rep", "algebra-dim": 2, "module-dim": 2,
            "l": [
                {"args": [1, 1], "matrix": [["1", "0"], ["0", "0"]]},
                {"args": [1, 2], "matrix": [["0", "1"], ["0", "0"]]},
                {"args": [2, 2], "matrix": [["0", "1"], ["0", "0"]]},
            ],
            "m": [
                {"args": [1, 2], "matrix": [["0", "1"], ["0", "0"]]},
                {"args": [2, 2], "matrix": [["0", "1"], ["0", "0"]]},
            ],
            "r": [
                {"args": [2, 2], "matrix": [["1", "1"], ["0", "0"]]},
            ],
        },
        "operator": {"kind": "operator", "matrix": [["0", "0"], ["0", "0"]]},
    });
    let path = temp_path("broken-rep.json");
    std::fs::write(&path, serde_json::to_string(&bundle).unwrap()).unwrap();
    let out = ltsys(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("representation is invalid"));
    assert!(text.contains("rep-"), "witness names the identity: {text}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn json_reports_round_trip_byte_identically() {
    let path = temp_path("report.json");
    let out = ltsys(&[
        "cohomology",
        "--fixture",
        "b2-family1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let bytes = std::fs::read(&path).unwrap();
    let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&value).unwrap();
    reserialized.push('\n');
    assert_eq!(bytes, reserialized.into_bytes());
    assert_eq!(value["complex_ok"], serde_json::json!(true));
    assert_eq!(value["h1"], serde_json::json!(2));
    assert_eq!(value["h3"], serde_json::json!(6));
    std::fs::remove_file(&path).ok();
}

#[test]
fn classify_grid_finds_the_29_operators() {
    let path = temp_path("grid.json");
    let out = ltsys(&[
        "classify-grid",
        "builtin:b2",
        "--bound",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("29 of 625"));
    let value: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(value["count"], serde_json::json!(29));
    assert_eq!(value["passing"].as_array().unwrap().len(), 29);
    std::fs::remove_file(&path).ok();
}

#[test]
fn classify_grid_guard_is_a_usage_error() {
    // 4x4 cells at bound 3 exceeds the candidate limit.
    let bundle = serde_json::json!({
        "lts": {"kind": "lts", "dim": 4, "products": []},
        "representation": "adjoint",
    });
    let path = temp_path("big.json");
    std::fs::write(&path, serde_json::to_string(&bundle).unwrap()).unwrap();
    let out = ltsys(&["classify-grid", path.to_str().unwrap(), "--bound", "3"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn deform_trivial_extension() {
    let out = ltsys(&["deform", "extend", "builtin:b2-deform-trivial"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("obstruction: zero"));
    assert!(text.contains("re-verified at order 2: ok"));
}

#[test]
fn deform_blocked_series_reports_nontrivial_class() {
    let out = ltsys(&["deform", "obstruction", "builtin:b2-deform-blocked"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("obstruction: nontrivial-class"));

    let out = ltsys(&["deform", "extend", "builtin:b2-deform-blocked"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not extendable"));

    // Truncating away the blocked coefficient leaves an extendable series.
    let out = ltsys(&["deform", "extend", "builtin:b2-deform-blocked", "--order", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn deform_detects_broken_order_one() {
    // Identity is not a 1-cocycle for the family-1 operator.
    let bundle = serde_json::json!({
        "lts": {
            "kind": "lts", "dim": 2, "basis": ["e1", "e2"],
            "products": [
                {"args": [1, 2, 2], "value": [[1, "1"]]},
                {"args": [2, 2, 2], "value": [[1, "1"]]},
            ],
        },
        "representation": "adjoint",
        "operator": {"kind": "operator", "matrix": [["1", "0"], ["0", "0"]]},
        "deformation": {
            "kind": "deformation",
            "coefficients": [
                [["1", "0"], ["0", "0"]],
                [["1", "0"], ["0", "1"]],
            ],
        },
    });
    let path = temp_path("broken-deform.json");
    std::fs::write(&path, serde_json::to_string(&bundle).unwrap()).unwrap();
    let out = ltsys(&["deform", "verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("order 0: ok"));
    assert!(text.contains("order 1: FAILED"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn deform_coefficient_operator_mismatch_is_usage_error() {
    let bundle = serde_json::json!({
        "lts": {
            "kind": "lts", "dim": 2,
            "products": [
                {"args": [1, 2, 2], "value": [[1, "1"]]},
                {"args": [2, 2, 2], "value": [[1, "1"]]},
            ],
        },
        "representation": "adjoint",
        "operator": {"kind": "operator", "matrix": [["1", "0"], ["0", "0"]]},
        "deformation": {
            "kind": "deformation",
            "coefficients": [[["0", "0"], ["0", "0"]]],
        },
    });
    let path = temp_path("mismatch-deform.json");
    std::fs::write(&path, serde_json::to_string(&bundle).unwrap()).unwrap();
    let out = ltsys(&["deform", "verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn functor_fixtures_pass_all_four_checks() {
    for fixture in ["leibniz-a", "leibniz-b"] {
        let path = temp_path(&format!("functor-{fixture}.json"));
        let out = ltsys(&["functor", "--fixture", fixture, "--json", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{fixture}");
        let value: serde_json::Value =
            serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
        for key in [
            "relative_rb_on_lts",
            "cocycle_transfer",
            "omega_transfer",
            "lemma_identity",
        ] {
            assert_eq!(value[key], serde_json::json!(true), "{fixture} {key}");
        }
        std::fs::remove_file(&path).ok();
    }
}

#[test]
fn functor_rejects_non_operators_naming_the_identity() {
    let bundle = serde_json::json!({
        "leibniz": {
            "kind": "leibniz", "dim": 2,
            "products": [{"args": [1, 2], "value": [[1, "1"]]}],
        },
        "leibniz_representation": "adjoint",
        "operator": {"kind": "operator", "matrix": [["1", "0"], ["0", "1"]]},
    });
    let path = temp_path("functor-bad.json");
    std::fs::write(&path, serde_json::to_string(&bundle).unwrap()).unwrap();
    let out = ltsys(&["functor", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("leibniz-rb"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn file_bundle_matches_builtin_results() {
    // The documented bundle format, written out by hand.
    let bundle = serde_json::json!({
        "lts": {
            "kind": "lts", "dim": 2, "basis": ["e1", "e2"],
            "products": [
                {"args": [1, 2, 2], "value": [[1, "1"]]},
                {"args": [2, 2, 2], "value": [[1, "1"]]},
            ],
        },
        "representation": "adjoint",
        "operator": {"kind": "operator", "matrix": [["0", "1"], ["0", "-1"]]},
    });
    let path = temp_path("bundle.json");
    std::fs::write(&path, serde_json::to_string_pretty(&bundle).unwrap()).unwrap();
    let out = ltsys(&["verify", "relative-rb", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_file(&path).ok();
}
