// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::TAU;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use eqvol::projective::spiral_seed;
use eqvol::{
    equal_area_from_curvature, regular_equal_area, sample_curve, sample_plane_curve,
    silhouette_lift, Curve, SampleGrid, Vec2,
};
use serde_json::{json, Value};
use tempfile::TempDir;

fn eqvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqvol"))
        .args(args)
        .env_remove("EQVOL_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_doc(dir: &TempDir, name: &str, doc: &Value) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, serde_json::to_string_pretty(doc).unwrap()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn rows3(pts: &[eqvol::Vec3]) -> Vec<[f64; 3]> {
    pts.iter().map(|v| v.to_array()).collect()
}

/// The spiral representative, framed by the rays from the origin.
fn spiral_cone(n: usize) -> Value {
    let p = sample_curve(&Curve::ExampleSpiralRepresentative, 0.0, TAU, n, SampleGrid::HalfOpenStep).unwrap();
    let v = rows3(p.vertices());
    json!({ "kind": "framed3", "vertices": v, "directions": v })
}

fn single_line_fixture() -> Value {
    let kappa: Vec<f64> = (0..40).map(|i| 0.02 + 0.01 * (0.3 * i as f64).sin()).collect();
    let h: f64 = 0.15;
    let g = equal_area_from_curvature(
        Vec2::new(1.0, 0.0),
        Vec2::new(1.0, 0.0),
        Vec2::new(h.cos(), h.sin()),
        &kappa,
    )
    .unwrap();
    let lifted = silhouette_lift(&g, Vec2::new(0.2, -0.1)).unwrap();
    json!({ "kind": "polygon3", "vertices": rows3(lifted.vertices()) })
}

fn regular_plane(n: usize) -> Value {
    let g = regular_equal_area(n).unwrap();
    let v: Vec<[f64; 2]> = g.big_gamma.values().iter().map(|p| [p.x, p.y]).collect();
    json!({ "kind": "polygon2", "vertices": v })
}

fn obj_vertices(text: &str) -> Vec<[f64; 3]> {
    text.lines()
        .filter_map(|l| l.strip_prefix("v "))
        .map(|l| {
            let c: Vec<f64> = l.split_whitespace().map(|t| t.parse().unwrap()).collect();
            [c[0], c[1], c[2]]
        })
        .collect()
}

fn obj_faces(text: &str) -> Vec<Vec<usize>> {
    text.lines()
        .filter_map(|l| l.strip_prefix("f "))
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect()
}

#[test]
fn analyze_framed_cone() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "cone.json", &spiral_cone(200));
    let o = eqvol(&["analyze", s(&input), "--framed"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("classification: cone, quality "), "{out}");
    assert!(out.contains("vertices: 200"));
}

#[test]
fn analyze_silhouette_lift_is_single_line() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "lift.json", &single_line_fixture());
    let json_out = dir.path().join("report.json");
    let o = eqvol(&["analyze", s(&input), "--origin", "0,0,0", "--json", s(&json_out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("focal: single-line"), "{}", stdout(&o));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(json_out).unwrap()).unwrap();
    assert_eq!(report["classification"]["focal"], "single-line");
    assert!(report["focal"]["mu_spread"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn analyze_without_framing_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let doc = json!({ "kind": "polygon3", "vertices": [
        [0.3, 0.1, 1.0], [0.9, 0.5, 1.2], [1.1, 1.4, 0.8], [0.2, 1.9, 1.1], [-0.5, 1.2, 0.9]
    ]});
    let input = write_doc(&dir, "random.json", &doc);
    let o = eqvol(&["analyze", s(&input)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--origin"), "{}", stderr(&o));
}

#[test]
fn malformed_documents_exit_one() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"kind\":\"polygon3\",\"vertices\":[[0,1]]}").unwrap();
    assert_eq!(eqvol(&["analyze", s(&p), "--origin", "0,0,0"]).status.code(), Some(1));
    std::fs::write(&p, "not json").unwrap();
    assert_eq!(eqvol(&["analyze", s(&p), "--origin", "0,0,0"]).status.code(), Some(1));
    assert_eq!(eqvol(&["analyze", "/nonexistent/x.json", "--framed"]).status.code(), Some(1));
    assert_eq!(eqvol(&["analyze", s(&p), "--origin", "0,0"]).status.code(), Some(1));
    assert_eq!(eqvol(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(eqvol(&["--help"]).status.code(), Some(0));
}

#[test]
fn resample_is_idempotent() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "cone.json", &spiral_cone(120));
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let o = eqvol(&["resample", s(&input), "--framed", "--out", s(&a)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = eqvol(&["resample", s(&a), "--framed", "--out", s(&b)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let da: Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let db: Value = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(da["vertices"], db["vertices"]);
    assert_eq!(
        serde_json::to_string(&da["vertices"]).unwrap(),
        serde_json::to_string(&db["vertices"]).unwrap()
    );
}

#[test]
fn resample_dense_spiral() {
    let dir = TempDir::new().unwrap();
    let p = sample_curve(&Curve::ExampleSpiral, 0.0, TAU, 2000, SampleGrid::HalfOpenStep).unwrap();
    let input = write_doc(&dir, "spiral.json", &json!({ "kind": "polygon3", "vertices": rows3(p.vertices()) }));
    let out = dir.path().join("out.json");
    let o = eqvol(&["resample", s(&input), "--origin", "0,0,0", "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let d: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(d["kind"], "framed3");
    let spread = d["metadata"]["volume_spread"].as_f64().unwrap();
    assert!(spread <= 1e-9, "spread {spread}");
    assert!(d["metadata"]["input_volume_spread"].as_f64().unwrap() > 1e-3);
    assert!(d["metadata"]["output_vertices"].as_u64().unwrap() >= 4);
    assert!(d["metadata"]["termination"].is_string());
}

#[test]
fn resample_short_input_exits_one() {
    let dir = TempDir::new().unwrap();
    let doc = json!({ "kind": "polygon3", "vertices": [[1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [-1.0, 0.0, 1.0]] });
    let input = write_doc(&dir, "short.json", &doc);
    let out = dir.path().join("out.json");
    let o = eqvol(&["resample", s(&input), "--origin", "0,0,0", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(!out.exists());
}

#[test]
fn plength_on_spiral_with_analytic_seeds() {
    let dir = TempDir::new().unwrap();
    let n = 1000;
    let p = sample_plane_curve(&Curve::ExampleSpiral, 0.0, TAU, n, SampleGrid::HalfOpenStep).unwrap();
    let v: Vec<[f64; 2]> = p.vertices().iter().map(|q| [q.x, q.y]).collect();
    let input = write_doc(&dir, "spiral.json", &json!({ "kind": "polygon2", "vertices": v }));
    let eqvol::Seed::Explicit { a1, a2, c } = spiral_seed(n).unwrap() else {
        panic!("spiral seed is explicit");
    };
    let (a1, a2, c) = (format!("{a1:?}"), format!("{a2:?}"), format!("{c:?}"));
    let report = dir.path().join("pl.json");
    let o = eqvol(&["plength", s(&input), "--a1", &a1, "--a2", &a2, "--c", &c, "--report", s(&report)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let pl1: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("pl1: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((pl1 - 7.13407).abs() < 0.02, "pl1 = {pl1}");
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["normalization"]["seed"], "explicit");
    assert_eq!(r["pl1"].as_f64().unwrap(), pl1);
    assert!(!r["terms1"]["values"].as_array().unwrap().is_empty());
    assert!(!r["terms2"]["values"].as_array().unwrap().is_empty());
}

#[test]
fn plength_seed_flags_go_together() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "reg.json", &regular_plane(12));
    assert_eq!(eqvol(&["plength", s(&input), "--a1", "1"]).status.code(), Some(1));
    assert_eq!(
        eqvol(&["plength", s(&input), "--a1", "1", "--a2", "1", "--c", "1", "--auto-seed"]).status.code(),
        Some(1)
    );
}

#[test]
fn plength_concave_polygon_exits_two() {
    let dir = TempDir::new().unwrap();
    let v: Vec<[f64; 2]> = (0..30)
        .map(|i| {
            let x = i as f64 * 0.1;
            [x, x * x * x - 1.5 * x * x]
        })
        .collect();
    let input = write_doc(&dir, "s.json", &json!({ "kind": "polygon2", "vertices": v }));
    let o = eqvol(&["plength", s(&input)]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("b(i) > 0"), "{}", stderr(&o));
}

#[test]
fn plength_regular_polygon_is_zero() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "reg.json", &regular_plane(24));
    let o = eqvol(&["plength", s(&input)]);
    assert!(o.status.success(), "{}", stderr(&o));
    for l in stdout(&o).lines() {
        let (_, v) = l.split_once(": ").unwrap();
        let v: f64 = v.parse().unwrap();
        // The cube root lifts rounding to about 1e-5.
        assert!(v.abs() < 1e-4, "{l}");
    }
}

#[test]
fn focal_single_line_obj() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "lift.json", &single_line_fixture());
    let obj = dir.path().join("focal.obj");
    let o = eqvol(&["focal", s(&input), "--origin", "0,0,0", "--obj", s(&obj)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&obj).unwrap();
    assert!(text.contains("# focal set is a single line"));
    let flagged = text.lines().filter(|l| l.starts_with("# degenerate face")).count();
    assert!(flagged >= 30, "{flagged} flagged");
    assert!(text.lines().any(|l| l.starts_with("l ")));
    assert!(!obj_vertices(&text).is_empty());
}

#[test]
fn focal_of_planar_polygon_has_evolute_in_plane() {
    let dir = TempDir::new().unwrap();
    let g = regular_equal_area(9).unwrap();
    let v: Vec<[f64; 3]> = g.big_gamma.values().iter().map(|p| [p.x, p.y, 1.0]).collect();
    let input = write_doc(&dir, "plane.json", &json!({ "kind": "polygon3", "vertices": v }));
    let obj = dir.path().join("focal.obj");
    let o = eqvol(&["focal", s(&input), "--origin", "0,0,0", "--obj", s(&obj)]);
    assert!(o.status.code() == Some(0) || o.status.code() == Some(2), "{}", stderr(&o));
    let text = std::fs::read_to_string(&obj).unwrap();
    let (_, evolute) = text.split_once("g evolute\n").expect("evolute group");
    let pts = obj_vertices(evolute);
    assert!(!pts.is_empty());
    for p in pts {
        assert!((p[2] - 1.0).abs() <= 1e-9, "{p:?}");
    }
}

#[test]
fn cone_developable_faces_share_the_apex() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "cone.json", &spiral_cone(60));
    let obj = dir.path().join("dev.obj");
    let o = eqvol(&["developable", s(&input), "--framed", "--obj", s(&obj)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&obj).unwrap();
    let faces = obj_faces(&text);
    assert_eq!(faces.len(), 59);
    let common: Vec<usize> = faces[0]
        .iter()
        .copied()
        .filter(|i| faces.iter().all(|f| f.contains(i)))
        .collect();
    assert_eq!(common.len(), 1, "{common:?}");
    let apex = obj_vertices(&text)[common[0] - 1];
    assert!(apex.iter().all(|c| c.abs() < 1e-9), "{apex:?}");
}

#[test]
fn negative_extent_is_rejected() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "cone.json", &spiral_cone(30));
    let obj = dir.path().join("dev.obj");
    let o = eqvol(&["developable", s(&input), "--framed", "--obj", s(&obj), "--extent", "-1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table1_default_sizes() {
    let o = eqvol(&["table1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("N,h,pl1,pl2"));
    let want = [
        (10, 4.26627, 3.55522, 0.25),
        (100, 6.87572, 6.80410, 0.05),
        (1000, 7.13407, 7.12691, 0.02),
    ];
    for (line, (n, p1, p2, tol)) in lines.by_ref().zip(want) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[0].parse::<usize>().unwrap(), n);
        let pl1: f64 = f[2].parse().unwrap();
        let pl2: f64 = f[3].parse().unwrap();
        assert!((pl1 - p1).abs() <= tol, "{line}");
        assert!((pl2 - p2).abs() <= tol, "{line}");
        assert_eq!(f[2].split_once('.').unwrap().1.len(), 5);
    }
    assert_eq!(lines.next(), None);
}

#[test]
fn table1_single_size_and_csv_file() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("t.csv");
    let o = eqvol(&["table1", "--sizes", "10", "--csv", s(&csv)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[1].starts_with("10,0.62831,"), "{}", rows[1]);
}

#[test]
fn table1_too_small_exits_one() {
    let o = eqvol(&["table1", "--sizes", "4"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn csv_input_is_accepted() {
    let dir = TempDir::new().unwrap();
    let g = regular_equal_area(16).unwrap();
    let mut text = String::from("# x,y\n");
    for p in g.big_gamma.values() {
        text += &format!("{:?},{:?}\n", p.x, p.y);
    }
    let p = dir.path().join("reg.csv");
    std::fs::write(&p, text).unwrap();
    let o = eqvol(&["analyze", s(&p), "--origin", "0,0,0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("planar: yes"), "{}", stdout(&o));
}

#[test]
fn commands_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "lift.json", &single_line_fixture());
    let run = |tag: &str| {
        let json_out = dir.path().join(format!("r{tag}.json"));
        let obj = dir.path().join(format!("f{tag}.obj"));
        let a = eqvol(&["analyze", s(&input), "--origin", "0,0,0", "--json", s(&json_out)]);
        let f = eqvol(&["focal", s(&input), "--origin", "0,0,0", "--obj", s(&obj)]);
        (
            a.stdout,
            std::fs::read(json_out).unwrap(),
            f.status.code(),
            std::fs::read(obj).unwrap(),
        )
    };
    assert_eq!(run("1"), run("2"));
}
