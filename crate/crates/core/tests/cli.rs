use std::path::PathBuf;

use lur::cli::run;
use lur::numeric::{parse_rational, ComplexInterval};
use serde_json::Value;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["lur"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(name: &str, text: &str) -> String {
    let mut p = std::env::temp_dir();
    p.push(format!("lur-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn boxes(json: &Value) -> Vec<Vec<ComplexInterval>> {
    json["boxes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| {
            b["coords"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| {
                    let parts: Vec<&str> = [&c["re"][0], &c["re"][1], &c["im"][0], &c["im"][1]]
                        .iter()
                        .map(|v| v.as_str().unwrap())
                        .collect();
                    ComplexInterval::from_strings(&parts).unwrap()
                })
                .collect()
        })
        .collect()
}

#[test]
fn sphere_plane_real_boxes() {
    let file = data("sphere_plane.sys");
    let (code, out, _) = invoke(&[&file, "--eps", "1/1024", "--s", "1/20,1/2", "--d1", "1/2", "--real-only"]);
    assert_eq!(code, 0);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["lur"]["s"], serde_json::json!(["1/20", "1/2"]));
    let found = boxes(&json);
    assert_eq!(found.len(), 2);
    let x_lo = parse_rational("5519/65536").unwrap();
    let x_hi = parse_rational("345/4096").unwrap();
    assert!(found.iter().any(|b| b[0].re.lo <= x_hi && x_lo <= b[0].re.hi));
}

#[test]
fn oversized_scale_is_rejected() {
    let file = data("sphere_plane.sys");
    let (code, out, err) = invoke(&[&file, "--s", "1,1", "--tight-bounds"]);
    assert_eq!(code, 4);
    assert!(out.is_empty());
    assert!(err.contains("invalid scale"));
}

#[test]
fn linear_system() {
    let file = temp_file("linear.sys", "vars: x\nx - 1\n");
    let (code, out, _) = invoke(&[&file]);
    assert_eq!(code, 0);
    let json: Value = serde_json::from_str(&out).unwrap();
    let found = boxes(&json);
    assert_eq!(found.len(), 1);
    assert_eq!(found[0][0], ComplexInterval::real_point(parse_rational("1").unwrap()));
}

#[test]
fn error_exit_codes() {
    let curve = temp_file("curve.sys", "vars: x, y\nx^2 + y^2 - 1\n");
    assert_eq!(invoke(&[&curve]).0, 2);
    let bad = temp_file("bad.sys", "vars: x\ny - 1\n");
    let (code, _, err) = invoke(&[&bad]);
    assert_eq!(code, 3);
    assert!(err.contains("2:1"), "{err}");
    let file = data("sphere_plane.sys");
    assert_eq!(invoke(&[&file, "--eps", "zero"]).0, 3);
    assert_eq!(invoke(&[&file, "--eps", "0"]).0, 4);
    assert_eq!(invoke(&["/nonexistent/system.sys"]).0, 1);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn inconsistent_system_has_no_boxes() {
    let file = temp_file("empty.sys", "vars: x, y\nx*y - 1\nx\n");
    let (code, out, _) = invoke(&[&file]);
    assert_eq!(code, 0);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert!(json["lur"].is_null());
    assert_eq!(json["boxes"].as_array().unwrap().len(), 0);
}

#[test]
fn output_is_deterministic_and_formats_agree() {
    let file = data("sphere_plane.sys");
    let (_, first, _) = invoke(&[&file, "--multiplicities"]);
    let (_, second, _) = invoke(&[&file, "--multiplicities"]);
    assert_eq!(first, second);
    let (_, text, _) = invoke(&[&file, "--multiplicities", "--format", "text"]);
    let json: Value = serde_json::from_str(&first).unwrap();
    let found = boxes(&json);
    assert_eq!(found.len(), 4);
    for b in &found {
        for c in b {
            let [a, bb, cc, d] = c.to_strings();
            assert!(text.contains(&format!("re [{a}, {bb}] im [{cc}, {d}]")));
        }
    }
    let sorted = found.windows(2).all(|w| w[0][0].lex_cmp(&w[1][0]).is_le());
    assert!(sorted);
}

#[test]
fn embedded_options_apply() {
    let file = temp_file(
        "embedded.sys",
        "vars: x, y, z\ns: 1/20, 1/2\nd1: 1/2\nx^2 + y^2 + z^2 - 3\nx^2 + 2*y^2 - 3*z + 1\nx + y - z\n",
    );
    let (code, out, _) = invoke(&[&file]);
    assert_eq!(code, 0);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["lur"]["d"][1], "5/1");
    let eps = parse_rational(json["lur"]["eps_schedule"][0].as_str().unwrap()).unwrap();
    assert_eq!(eps, parse_rational("1/40960").unwrap());
}
