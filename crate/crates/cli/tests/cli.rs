use std::process::{Command, Output};

fn dp3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dp3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn z_all_methods_agree_on_a_bridge_variable() {
    let o = dp3(&["z", "--model", "2", "--point", "0,-1,1", "--method", "all"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    let values: Vec<&str> = lines[..3].iter().map(|l| l.split_once(": ").unwrap().1).collect();
    assert!(values.iter().all(|v| *v == values[0]));
    assert!(values[0].contains("x1^-1"));
    assert_eq!(lines[3], "AGREE");
}

#[test]
fn z_at_a_seed_point_is_the_variable() {
    let o = dp3(&["z", "--model", "1", "--point", "0,0,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x6\n");
}

#[test]
fn self_intersecting_contours_point_to_taut() {
    let o = dp3(&["z", "--model", "4", "--point", "0,0,2", "--method", "matching"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("self-intersecting"), "{err}");
    assert!(err.contains("dp3 taut --point 0,0,2"), "{err}");
}

#[test]
fn verify_rejects_a_zero_grid() {
    assert_eq!(dp3(&["verify", "--grid", "0"]).status.code(), Some(2));
}

#[test]
fn verify_report_is_deterministic_and_round_trips() {
    let args = ["verify", "--grid", "1", "--models", "1,3"];
    let a = dp3(&args);
    let b = dp3(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["models"], serde_json::json!([1, 3]));
    assert!(v["passed"].as_u64().unwrap() > 50);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn export_of_an_empty_patch_is_a_valid_document() {
    let svg = stdout(&dp3(&["export", "--kind", "svg", "--empty"]));
    assert!(svg.starts_with("<svg ") && svg.trim_end().ends_with("</svg>"));
    let dot = stdout(&dp3(&["export", "--kind", "dot", "--empty"]));
    assert!(dot.starts_with("graph ") && dot.trim_end().ends_with('}'));
    let json: serde_json::Value = serde_json::from_str(&stdout(&dp3(&["export", "--kind", "json", "--empty"]))).unwrap();
    assert_eq!(json["patch"]["vertices"], serde_json::json!([]));
}

#[test]
fn exported_contour_shows_one_quad() {
    let svg = stdout(&dp3(&["export", "--kind", "svg", "--model", "2", "--point", "0,-1,1"]));
    assert_eq!(svg.matches("class=\"contour\"").count(), 1);
    assert_eq!(svg.matches("class=\"vertex\"").count(), 4);
    assert_eq!(svg.matches("class=\"edge\"").count(), 4);
    let dot = stdout(&dp3(&["export", "--kind", "dot", "--model", "2", "--point", "0,-1,1"]));
    assert_eq!(dot.matches(" -- ").count(), 4);
    // Balanced braces and one statement per line is all standard tools need.
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    assert!(dot.lines().skip(1).filter(|l| l.starts_with("  ")).all(|l| l.ends_with(';')));
}

#[test]
fn export_honours_the_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_dp3"))
        .args(["export", "--kind", "json", "--model", "1", "--tiling", "1", "--output", "t1.json"])
        .env("DP3_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("t1.json")).unwrap()).unwrap();
    assert!(!v["patch"]["edges"].as_array().unwrap().is_empty());
}

#[test]
fn hexahedron_prints_both_sequences() {
    let out = stdout(&dp3(&["hexahedron", "--n", "4"]));
    assert_eq!(out, "0 1 1\n1 1 3\n2 1 14\n3 14 588\n4 196 38416\n");
}

#[test]
fn mutate_reports_cluster_and_quiver() {
    let out = stdout(&dp3(&["mutate", "--model", "1", "--seq", "1"]));
    assert!(out.starts_with("x1: x1^-1*x3*x5 + x1^-1*x4*x6\n"));
    assert!(out.ends_with("quiver: model 2\n"));
    assert_eq!(dp3(&["mutate", "--model", "1", "--seq", "7"]).status.code(), Some(2));
}

#[test]
fn count_and_contour_describe_the_same_core() {
    assert_eq!(stdout(&dp3(&["count", "--model", "2", "--point", "0,-1,1"])), "2\n");
    let text = stdout(&dp3(&["contour", "--model", "2", "--point", "0,-1,1"]));
    assert!(text.contains("core: 4 vertices, 4 edges"));
    assert!(text.contains("self-intersecting: false"));
}

#[test]
fn taut_smallest_case() {
    let out = stdout(&dp3(&["taut", "--point", "0,0,2"]));
    assert!(out.contains("at ones: 14 "), "{out}");
}
