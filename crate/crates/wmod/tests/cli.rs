//! End-to-end checks of the wmod binary: exit codes, deterministic output,
//! batch mode, the WMOD_MAX_GENUS override, and validation of every --json
//! output against the shipped schema (docs/schema.json) via a small
//! structural validator covering the subset of JSON Schema the file uses.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn wmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("docs/schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Validates `value` against the subset of JSON Schema used by
/// docs/schema.json: $ref, type, properties, required, additionalProperties,
/// items, enum.
fn validate(schema_doc: &Value, node: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(r) = node.get("$ref").and_then(|r| r.as_str()) {
        let name = r.strip_prefix("#/$defs/").ok_or_else(|| format!("bad ref {r}"))?;
        let target = &schema_doc["$defs"][name];
        if target.is_null() {
            return Err(format!("unresolved $ref {r}"));
        }
        return validate(schema_doc, target, value, path);
    }
    if let Some(allowed) = node.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in enum {allowed:?}"));
        }
    }
    if let Some(ty) = node.get("type") {
        let names: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(|v| v.as_str()).collect(),
            _ => return Err(format!("{path}: malformed type")),
        };
        let matches = names.iter().any(|&name| match name {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            "integer" => value.as_i64().is_some() || value.as_u64().is_some(),
            "number" => value.is_number(),
            _ => false,
        });
        if !matches {
            return Err(format!("{path}: expected {names:?}, got {value}"));
        }
    }
    if let Some(obj) = value.as_object() {
        let props = node.get("properties").and_then(|p| p.as_object());
        if let Some(required) = node.get("required").and_then(|r| r.as_array()) {
            for key in required.iter().filter_map(|k| k.as_str()) {
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required key {key}"));
                }
            }
        }
        for (key, sub) in obj {
            let sub_path = format!("{path}.{key}");
            match props.and_then(|p| p.get(key)) {
                Some(prop_schema) => validate(schema_doc, prop_schema, sub, &sub_path)?,
                None => match node.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{path}: unexpected key {key}"))
                    }
                    Some(extra) if extra.is_object() => {
                        validate(schema_doc, extra, sub, &sub_path)?
                    }
                    _ => {}
                },
            }
        }
    }
    if let (Some(items), Some(arr)) = (node.get("items"), value.as_array()) {
        for (i, sub) in arr.iter().enumerate() {
            validate(schema_doc, items, sub, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn assert_valid(def: &str, text: &str) {
    let doc = schema();
    let value: Value = serde_json::from_str(text).unwrap_or_else(|e| {
        panic!("invalid JSON for {def}: {e}\n{text}");
    });
    validate(&doc, &doc["$defs"][def], &value, def)
        .unwrap_or_else(|e| panic!("schema violation: {e}"));
}

#[test]
fn analyze_text_output_and_exit_zero() {
    let out = wmod(&["analyze", "4,7,10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("genus 7"));
    assert!(text.contains("X7^2 - X4*X10"));
    assert!(text.contains("P^12"));
}

#[test]
fn analyze_json_validates() {
    let out = wmod(&["analyze", "4,7,10", "--json", "--canonical"]);
    assert!(out.status.success());
    assert_valid("analyze", &stdout(&out));
}

#[test]
fn analyze_json_non_ci_validates() {
    let out = wmod(&["analyze", "3,4,5", "--json"]);
    assert!(out.status.success());
    assert_valid("analyze", &stdout(&out));
}

#[test]
fn deterministic_byte_output() {
    let a = wmod(&["analyze", "4,7,10", "--json", "--canonical"]);
    let b = wmod(&["analyze", "4,7,10", "--json", "--canonical"]);
    assert_eq!(a.stdout, b.stdout);
    let c = wmod(&["syzygies", "6,7,8"]);
    let d = wmod(&["syzygies", "6,7,8"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn exit_code_2_on_invalid_input() {
    let out = wmod(&["analyze", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("gcd"));

    let json_out = wmod(&["analyze", "2", "--json"]);
    assert_eq!(json_out.status.code(), Some(2));
    assert_valid("error", &stdout(&json_out));
    assert!(stdout(&json_out).contains("NonCoprime"));
}

#[test]
fn exit_code_1_on_guard_violation() {
    let out = wmod(&["analyze", "3,4,5", "--require-moduli"]);
    assert_eq!(out.status.code(), Some(1));

    let out = wmod(&["syzygies", "4,5"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cubic"));

    let json_out = wmod(&["syzygies", "4,5", "--json"]);
    assert_eq!(json_out.status.code(), Some(1));
    assert_valid("error", &stdout(&json_out));
}

#[test]
fn enumerate_counts_and_records() {
    let out = wmod(&["enumerate", "--genus", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 7);

    let out = wmod(&["enumerate", "--genus", "0"]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = wmod(&["enumerate", "--genus", "7", "--symmetric", "--ci"]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "4,7,10"));

    let out = wmod(&["enumerate", "--genus", "5", "--json", "--moduli"]);
    for line in stdout(&out).lines() {
        assert_valid("enumerate_record", line);
    }
}

#[test]
fn enumerate_bound_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_wmod"))
        .args(["enumerate", "--genus", "4"])
        .env("WMOD_MAX_GENUS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let ok = Command::new(env!("CARGO_BIN_EXE_wmod"))
        .args(["enumerate", "--genus", "16"])
        .env("WMOD_MAX_GENUS", "16")
        .output()
        .unwrap();
    assert!(ok.status.success());
}

#[test]
fn t1_unfold_syzygies_buchweitz_json_validate() {
    let out = wmod(&["t1", "4,7,10", "--json", "--char", "3"]);
    assert!(out.status.success());
    assert_valid("t1", &stdout(&out));

    let out = wmod(&["unfold", "4,7,10", "--json"]);
    assert!(out.status.success());
    assert_valid("unfold", &stdout(&out));

    let out = wmod(&["unfold", "2,3", "--json"]);
    assert!(out.status.success());
    assert_valid("unfold", &stdout(&out));

    // Non-CI input: the raw unfold is shown, flagged, with null moduli.
    let out = wmod(&["unfold", "3,4,5", "--json"]);
    assert!(out.status.success());
    assert_valid("unfold", &stdout(&out));
    assert!(stdout(&out).contains("\"moduli\": null"));

    // T1 is rejected outright for non-complete-intersections.
    let out = wmod(&["t1", "3,4,5"]);
    assert_eq!(out.status.code(), Some(1));

    let out = wmod(&["syzygies", "4,7,10", "--json"]);
    assert!(out.status.success());
    assert_valid("syzygies", &stdout(&out));

    let out = wmod(&["buchweitz", "13,14,15,16,17,18,20,22,23", "--json", "--n-max", "2"]);
    assert!(out.status.success());
    assert_valid("buchweitz", &stdout(&out));
    assert!(stdout(&out).contains("\"obstructed\": true"));
}

#[test]
fn buchweitz_text_verdict() {
    let out = wmod(&["buchweitz", "13,14,15,16,17,18,20,22,23", "--n-max", "2"]);
    assert!(stdout(&out).contains("obstructed at n=2"));
    let out = wmod(&["buchweitz", "4,5,6,7"]);
    assert!(stdout(&out).contains("not obstructed"));
}

#[test]
fn batch_and_out_file() {
    let dir = std::env::temp_dir().join(format!("wmod_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let batch = dir.join("batch.txt");
    std::fs::write(&batch, "# two curves\n4,7,10\n2,3 # cusp\n").unwrap();
    let report = dir.join("report.ndjson");

    let out = wmod(&[
        "analyze",
        "--batch",
        batch.to_str().unwrap(),
        "--json",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let written = std::fs::read_to_string(&report).unwrap();
    let lines: Vec<&str> = written.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in &lines {
        assert_valid("analyze", line);
    }
    // Order follows the input file.
    assert!(lines[0].contains("\"generators\":[4,7,10]"));
    assert!(lines[1].contains("\"generators\":[2,3]"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn t1_text_shows_split() {
    let out = wmod(&["t1", "4,7,10"]);
    let text = stdout(&out);
    assert!(text.contains("tjurina 14"));
    assert!(text.contains("dim T1- 13"));
}
