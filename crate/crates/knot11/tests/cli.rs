//! End-to-end tests of the command-line surface.

use std::process::Command;

fn knot11() -> Command {
    Command::new(env!("CARGO_BIN_EXE_knot11"))
}

#[test]
fn compute_family_report() {
    let out = knot11().args(["compute", "--family", "0"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let report = &doc["report"];
    assert_eq!(report["tau"], 1);
    assert_eq!(report["seifert_genus"], 2);
    assert_eq!(report["generator_count"], 31);
    assert_eq!(report["verdicts"]["conway_trivial"], true);
    assert_eq!(report["verdicts"]["topologically_slice_certified"], true);
    assert_eq!(report["verdicts"]["smoothly_slice_obstructed"], true);
    assert_eq!(report["verdicts"]["g4_lower_bound"], 1);
    assert_eq!(report["alexander"], serde_json::json!({"0": 1}));
    assert!(doc["timing_ms"].is_number());
}

#[test]
fn compute_unknot_report() {
    let out = knot11().args(["compute", "--params", "1,0,0,0"]).output().unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["report"]["tau"], 0);
    assert_eq!(doc["report"]["generators"], serde_json::json!([[1, 0, 0]]));
}

#[test]
fn compute_rejects_bad_offset() {
    let out = knot11().args(["compute", "--params", "31,12,6,17"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compute_reports_are_deterministic() {
    let strip = |bytes: &[u8]| -> serde_json::Value {
        let mut doc: serde_json::Value = serde_json::from_slice(bytes).unwrap();
        doc.as_object_mut().unwrap().remove("timing_ms");
        doc
    };
    let a = knot11().args(["compute", "--params", "5,2,0,4"]).output().unwrap();
    let b = knot11().args(["compute", "--params", "5,2,0,4"]).output().unwrap();
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
}

#[test]
fn compute_from_matchings_file() {
    let dir = std::env::temp_dir().join("knot11-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("matchings.json");
    std::fs::write(
        &path,
        r#"{"p": 5, "bottom": [[1,4],[2,3]], "top": [[2,5],[3,4]], "through": [[5,1]]}"#,
    )
    .unwrap();
    let out = knot11()
        .args(["compute", "--matchings", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["report"]["generator_count"], 5);
    assert_eq!(doc["report"]["parameters"]["matchings"], true);
}

#[test]
fn matchings_file_with_crossing_arcs_fails() {
    let dir = std::env::temp_dir().join("knot11-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("crossing.json");
    std::fs::write(
        &path,
        r#"{"p": 5, "bottom": [[1,3],[2,4]], "top": [[2,5],[3,4]], "through": [[5,1]]}"#,
    )
    .unwrap();
    let out = knot11()
        .args(["compute", "--matchings", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn render_family_svg() {
    let dir = std::env::temp_dir().join("knot11-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k0.svg");
    let out = knot11()
        .args(["render", "--family", "0", "--bigon", "12,13", "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("polygon"));
    assert_eq!(svg.matches("r=\"2\"").count(), 31);
}

#[test]
fn render_rejects_bad_params() {
    let dir = std::env::temp_dir().join("knot11-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.svg");
    let out = knot11()
        .args(["render", "--params", "31,12,6,17", "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_paper_passes() {
    let out = knot11().args(["verify-paper", "--max-n", "1"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS tau-0"));
    assert!(text.contains("PASS k0-cfk-full"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn scan_small() {
    let out = knot11().args(["scan", "--p-max", "1"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 1);
    let row: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(row["p"], 1);
    assert_eq!(row["tau"], 0);
    assert_eq!(row["flagged"], false);
}

#[test]
fn scan_rejects_huge_ceiling() {
    let out = knot11().args(["scan", "--p-max", "10000"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_deterministic_and_flags_family() {
    // p <= 7 keeps the run quick while covering several valid tuples
    let a = knot11().args(["scan", "--p-max", "7"]).output().unwrap();
    let b = knot11().args(["scan", "--p-max", "7"]).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    for line in text.trim().lines() {
        let row: serde_json::Value = serde_json::from_str(line).unwrap();
        let flagged = row["conway_trivial"].as_bool().unwrap()
            && row["tau"].as_i64().unwrap() != 0;
        assert_eq!(row["flagged"].as_bool().unwrap(), flagged);
    }
}
