use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn vogan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vogan")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = vogan(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Compares with `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let got = stdout(args);
    let path = crate_dir().join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(got, want, "golden {} differs", name);
}

/// Checks the keywords the shipped schemas use: type, enum, required,
/// properties, additionalProperties, items and minimum.
fn conforms(v: &Value, s: &Value, at: &str) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{}: {}", at, what));
    if let Some(ty) = s.get("type") {
        let names: Vec<&str> = match ty {
            Value::String(t) => vec![t.as_str()],
            Value::Array(ts) => ts.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let ok = names.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_i64() || v.is_u64(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            _ => false,
        });
        if !ok {
            return fail(&format!("expected {:?}, got {}", names, v));
        }
    }
    if let Some(Value::Array(opts)) = s.get("enum") {
        if !opts.contains(v) {
            return fail(&format!("{} not in enum", v));
        }
    }
    if let (Some(min), Some(x)) = (s.get("minimum").and_then(Value::as_i64), v.as_i64()) {
        if x < min {
            return fail(&format!("{} below {}", x, min));
        }
    }
    if let Some(obj) = v.as_object() {
        let props = s.get("properties").and_then(Value::as_object);
        for key in s.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !obj.contains_key(key.as_str().unwrap()) {
                return fail(&format!("missing {}", key));
            }
        }
        for (k, x) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => conforms(x, sub, &format!("{}.{}", at, k))?,
                None if s.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return fail(&format!("unexpected key {}", k))
                }
                None => {}
            }
        }
    }
    if let (Some(items), Some(arr)) = (s.get("items"), v.as_array()) {
        for (i, x) in arr.iter().enumerate() {
            conforms(x, items, &format!("{}[{}]", at, i))?;
        }
    }
    Ok(())
}

fn check_schema(schema: &str, args: &[&str]) -> Value {
    let text = std::fs::read_to_string(crate_dir().join("schemas").join(schema)).unwrap();
    let s: Value = serde_json::from_str(&text).unwrap();
    let v: Value = serde_json::from_str(&stdout(args)).unwrap();
    conforms(&v, &s, "$").unwrap_or_else(|e| panic!("{} / {:?}: {}", schema, args, e));
    v
}

#[test]
fn goldens() {
    golden("show_branch.txt", &["show", "A2lm1_2:l=3;painted=0,3"]);
    golden("show_swap.txt", &["show", "A2lm1_2:l=3;rho=(0 1);painted=2"]);
    golden("show_e6.dot", &["show", "E6_2;painted=1", "--format", "dot"]);
    golden("classify_a2_2_extended.json", &["classify", "A2_2", "--moveset", "extended", "--format", "json"]);
    golden("classify_a2lm1_2_l3.txt", &["classify", "A2lm1_2:l=3"]);
    golden("orbit_dlp1_2_l3.txt", &["orbit", "Dlp1_2:l=3;painted=0", "--moveset", "extended"]);
    golden("verify_tables.txt", &["verify-tables"]);
    golden("roots_a2_2.txt", &["roots", "A2_2", "--degree", "1"]);
    golden("realize_d4_3_gcm.json", &["realize", "D4_3", "--window", "3", "--check", "gcm", "--format", "json"]);
}

#[test]
fn outputs_match_schemas() {
    let v =
        check_schema("classification.schema.json", &["classify", "A2_2", "--moveset", "extended", "--format", "json"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    check_schema("classification.schema.json", &["classify", "Dlp1_2:l=4", "--format", "json"]);
    check_schema("orbit.schema.json", &["orbit", "E6_2;painted=0,1", "--format", "json"]);
    check_schema("diagram.schema.json", &["show", "A2lm1_2:l=4;rho=(0 1);painted=4", "--format", "json"]);
    check_schema("tables.schema.json", &["verify-tables", "--format", "json"]);
    check_schema("roots.schema.json", &["roots", "E6_2", "--degree", "2", "--format", "json"]);
    let v =
        check_schema("report.schema.json", &["realize", "A2_2", "--window", "2", "--format", "json", "--seed", "9"]);
    assert_eq!(v["seed"], 9);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn classify_text_round_trips() {
    for ty in ["A2_2", "A2l_2:l=3", "A2lm1_2:l=4", "Dlp1_2:l=3", "E6_2", "D4_3"] {
        for m in ["strict", "extended"] {
            let text = stdout(&["classify", ty, "--moveset", m]);
            for line in text.lines().filter(|l| !l.starts_with('#')) {
                let field = line.split('\t').next().unwrap();
                let d = vogan::parse_diagram(field).unwrap();
                assert_eq!(d.to_text(), field);
            }
        }
    }
}

#[test]
fn output_file_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["classify", "E6_2", "--format", "json"],
        vec!["show", "D4_3;painted=1", "--format", "dot"],
        vec!["roots", "Dlp1_2:l=2", "--degree", "2"],
    ] {
        let path = dir.path().join("out");
        let mut with = args.clone();
        let p = path.to_str().unwrap();
        with.extend(["--output", p]);
        let out = vogan(&with);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
        assert_eq!(std::fs::read(&path).unwrap(), stdout(&args).into_bytes());
    }
}

#[test]
fn exit_codes() {
    let out = vogan(&["show", "A2lm1_2:l=2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("RankOutOfRange"));
    let out = vogan(&["show", "A2lm1_2:l=3;rho=(0 1);painted=0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("PaintedMovedVertex"));
    let out = vogan(&["realize", "E6_2", "--check", "psi"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("UnsupportedType"));
    let out = vogan(&["show", "Nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ParseError"));
    assert_eq!(vogan(&["classify"]).status.code(), Some(2));
    assert_eq!(vogan(&["classify", "A2_2", "--moveset", "loose"]).status.code(), Some(2));
    assert_eq!(vogan(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vogan(&["roots", "A2_2", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(vogan(&["--help"]).status.code(), Some(0));
}

#[test]
fn jobs_do_not_change_output() {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_vogan"))
            .args(["verify-tables", "--format", "json"])
            .env("VOGAN_JOBS", jobs)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn realize_prints_the_seed() {
    let text = stdout(&["realize", "A2lm1_2:l=3", "--window", "3", "--seed", "42"]);
    assert!(text.contains("seed: 42"));
    assert!(text.contains("psi: "));
    assert!(!text.contains("FAILED"));
}
