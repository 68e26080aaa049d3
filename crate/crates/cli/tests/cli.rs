use std::f64::consts::{FRAC_PI_4, PI, SQRT_2, TAU};
use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn minktrig(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_minktrig"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(format!("{name}.json"));
    path.to_str().unwrap().to_owned()
}

/// Parses `text` and validates it against one definition of the published schema.
fn conforming(text: &str, def: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/minktrig-1.json");
    let mut schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let root = schema.as_object_mut().unwrap();
    root.remove("anyOf");
    root.insert("$ref".into(), json!(format!("#/$defs/{def}")));
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let value: Value = serde_json::from_str(text).expect("output is JSON");
    if let Err(e) = validator.validate(&value) {
        panic!("{def} does not match the schema: {e}\n{text}");
    }
    value
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("{v} is not a number"))
}

#[test]
fn classify_chronosceles_file() {
    let r = minktrig(&["classify", "--file", &fixture("chronosceles")], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = conforming(&r.stdout, "classifyOutput");
    assert_eq!(v["proper_kind"], "chronosceles");
    assert_eq!(v["family"], "proper");
}

#[test]
fn classify_strange_from_stdin() {
    let r = minktrig(&["classify"], r#"{"vertices":[[1,0,0],[0,1,0],[0,0,1]]}"#);
    assert_eq!(r.code, 0);
    let v = conforming(&r.stdout, "classifyOutput");
    assert_eq!(v["family"], "strange");
    // sides between components serialize an infinite length
    assert_eq!(v["sides"][1]["length"], "inf");
}

#[test]
fn classify_reports_contractibility() {
    let r = minktrig(&["classify", "--file", &fixture("contractible")], "");
    let v = conforming(&r.stdout, "classifyOutput");
    assert_eq!(v["proper_kind"], "spatiolateral_contractible");
    assert_eq!(v["contractible"], true);
}

#[test]
fn malformed_json_is_an_input_error() {
    let r = minktrig(&["classify"], "{\"vertices\": [");
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    let e = conforming(r.stderr.trim(), "error");
    assert_eq!(e["error"], "MalformedJson");
}

#[test]
fn off_surface_vertex_is_an_input_error() {
    let r = minktrig(&["classify"], r#"{"vertices":[[0.5,0,0],[0,1,0],[0,0,1]]}"#);
    assert_eq!(r.code, 2);
    assert_eq!(conforming(r.stderr.trim(), "error")["error"], "OffSurface");
}

#[test]
fn unknown_fields_rejected_only_when_strict() {
    let input = r#"{"vertices":[[1,0,0],[0,1,0],[0,0,1]],"colour":"red"}"#;
    assert_eq!(minktrig(&["classify"], input).code, 0);
    let r = minktrig(&["--strict", "classify"], input);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("colour"));
}

#[test]
fn foreign_schema_tag_rejected() {
    let r = minktrig(&["classify"], r#"{"schema":"minktrig/2","vertices":[[1,0,0],[0,1,0],[0,0,1]]}"#);
    assert_eq!(r.code, 2);
}

#[test]
fn polar_of_hyperbolic_fixture() {
    let r = minktrig(&["polar", "--file", &fixture("hyperbolic")], "");
    assert_eq!(r.code, 0);
    let v = conforming(&r.stdout, "polarOutput");
    assert_eq!(v["epsilon"], 1);
    assert_eq!(v["components"], json!(["de_sitter", "de_sitter", "de_sitter"]));
    // A' = (B × C)/|||B × C||| for A=(√2,1,0), B=(√2,0,1), C=(√2,−1,0)
    let s3 = 3f64.sqrt();
    let a = &v["vertices"][0];
    for (got, want) in a.as_array().unwrap().iter().zip([1.0 / s3, SQRT_2 / s3, -SQRT_2 / s3]) {
        assert!((num(got) - want).abs() < 1e-12, "{a}");
    }
}

#[test]
fn polar_nonexistent_exits_3() {
    let r = minktrig(&["polar", "--file", &fixture("photosceles")], "");
    assert_eq!(r.code, 3);
    let v = conforming(&r.stdout, "polarOutput");
    assert_eq!(v["nonexistent"], "LightlikeSidePlane");
}

#[test]
fn polar_of_degenerate_is_zero() {
    let r = minktrig(&["polar", "--file", &fixture("degenerate")], "");
    assert_eq!(r.code, 0);
    let v = conforming(&r.stdout, "polarOutput");
    assert_eq!(v["zero_triangle"], true);
    assert_eq!(v["epsilon"], 0);
}

#[test]
fn verify_sampled_hyperbolic() {
    let r = minktrig(&["verify", "--sample", "hyperbolic", "1000", "--seed", "7"], "");
    assert_eq!(r.code, 0);
    let v = conforming(&r.stdout, "verifyOutput");
    assert_eq!(v["summary"]["count"], 1000);
    assert_eq!(v["summary"]["failures"], 0);
    assert!(num(&v["summary"]["max_residual"]) < 1e-9);
}

#[test]
fn verify_contractible_side_sum() {
    let r = minktrig(&["verify", "--file", &fixture("contractible")], "");
    assert_eq!(r.code, 0);
    let v = conforming(&r.stdout, "verifyOutput");
    let report = &v["reports"][0];
    assert_eq!(report["family"], "spatiolateral-contractible");
    assert!(num(&report["side_sum"]) < TAU);
    assert!(num(&report["max_residual"]) < 1e-10);
}

#[test]
fn verify_tempolateral_violates_inequality() {
    let sampled = minktrig(&["sample", "tempolateral", "--count", "1", "--seed", "5"], "");
    assert_eq!(sampled.code, 0);
    let s = conforming(&sampled.stdout, "sampleOutput");
    let triangle = s["triangles"][0].to_string();
    let r = minktrig(&["verify"], &triangle);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = conforming(&r.stdout, "verifyOutput");
    assert_eq!(v["reports"][0]["triangle_inequality"]["holds"], false);
    assert_eq!(v["reports"][0]["triangle_inequality"]["predicted"], false);
}

#[test]
fn strict_verify_fails_above_tolerance() {
    let args = ["--strict", "--tolerance", "1e-300", "verify", "--sample", "tempolateral", "50"];
    let r = minktrig(&args, "");
    assert_eq!(r.code, 4);
    let v = conforming(&r.stdout, "verifyOutput");
    assert!(num(&v["summary"]["failures"]) > 0.0);
    // the same run without --strict only reports
    assert_eq!(minktrig(&args[1..], "").code, 0);
}

#[test]
fn verify_rejects_unsupported_triangle() {
    let r = minktrig(&["verify", "--file", &fixture("chronosceles")], "");
    assert_eq!(r.code, 3);
    assert_eq!(conforming(r.stderr.trim(), "error")["error"], "UnsupportedFamily");
}

#[test]
fn sample_is_deterministic_and_reclassifies() {
    let a = minktrig(&["sample", "chronosceles", "--count", "4", "--seed", "9"], "");
    let b = minktrig(&["sample", "chronosceles", "--count", "4", "--seed", "9"], "");
    assert_eq!(a.stdout, b.stdout);
    let v = conforming(&a.stdout, "sampleOutput");
    for t in v["triangles"].as_array().unwrap() {
        let r = minktrig(&["classify"], &t.to_string());
        assert_eq!(conforming(&r.stdout, "classifyOutput")["proper_kind"], "chronosceles");
    }
}

#[test]
fn sample_unknown_family() {
    assert_eq!(minktrig(&["sample", "spherical"], "").code, 2);
}

fn rows(csv: &str) -> Vec<[f64; 4]> {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x1,x2,x3,t"));
    lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect()
}

#[test]
fn geodesic_quarter_circle() {
    let r = minktrig(&["export-geodesic", "--samples", "3"], r#"{"a":[0,1,0],"b":[0,0,1]}"#);
    assert_eq!(r.code, 0);
    let rows = rows(&r.stdout);
    assert_eq!(rows.len(), 3);
    for (row, t) in rows.iter().zip([0.0, FRAC_PI_4, PI / 2.0]) {
        assert!((row[3] - t).abs() < 1e-15);
        assert!((row[1] - t.cos()).abs() < 1e-15 && (row[2] - t.sin()).abs() < 1e-15);
    }
}

#[test]
fn geodesic_endpoints_exact() {
    let (a, b) = ([3f64.sqrt(), 1.0, 1.0], [2f64.cosh(), 2f64.sinh(), 0.0]);
    let input = json!({ "a": a, "b": b }).to_string();
    let r = minktrig(&["export-geodesic", "--samples", "17"], &input);
    assert_eq!(r.code, 0);
    let rows = rows(&r.stdout);
    assert_eq!(rows.len(), 17);
    assert_eq!(rows[0][..3], a);
    assert_eq!(rows[16][..3], b);
    for row in &rows {
        let q = -row[0] * row[0] + row[1] * row[1] + row[2] * row[2];
        assert!((q + 1.0).abs() < 1e-12);
    }
}

#[test]
fn geodesic_empty_segment() {
    let r = minktrig(&["export-geodesic"], r#"{"a":[1,0,0],"b":[-1,0,0]}"#);
    assert_eq!(r.code, 3);
    assert_eq!(conforming(r.stderr.trim(), "error")["error"], "EmptySegment");
}

#[test]
fn inputs_match_schema() {
    for name in ["chronosceles", "hyperbolic", "contractible", "photosceles", "degenerate"] {
        conforming(&std::fs::read_to_string(fixture(name)).unwrap(), "triangleInput");
    }
}
