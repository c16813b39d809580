use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl-lc"))
        .args(args)
        .current_dir(corpus())
        .env_remove("WEYL_LC_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn cases() -> Vec<(String, Vec<String>)> {
    let text = std::fs::read_to_string(corpus().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once('|').unwrap();
            (name.trim().to_string(), args.split_whitespace().map(String::from).collect())
        })
        .collect()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn corpus_matches_golden_output() {
    let mut failures = Vec::new();
    for (name, args) in cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let got = stdout(&args);
        let want = std::fs::read_to_string(corpus().join(format!("{name}.out"))).unwrap();
        if got != want {
            failures.push(format!("{name}:\n--- expected\n{want}--- got\n{got}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn json_agrees_with_text() {
    for (name, args) in cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(&args);
        let raw = stdout(&full);
        let v: Value = serde_json::from_str(&raw).unwrap();
        let text = std::fs::read_to_string(corpus().join(format!("{name}.out"))).unwrap();
        // field order as emitted, not as parsed
        let keys: Vec<&str> = raw
            .lines()
            .filter_map(|l| l.strip_prefix("  \"").and_then(|r| r.split_once('"')).map(|(k, _)| k))
            .collect();
        assert_eq!(
            keys,
            ["query", "n", "vars", "exponent_a", "nodes", "generators", "relations", "is_zero", "timings", "value", "warnings"],
            "{name}"
        );
        for r in v["relations"].as_array().unwrap() {
            assert!(text.contains(&format!("\n  {}\n", r.as_str().unwrap())), "{name}: relation {r}");
        }
        for (i, g) in v["generators"].as_array().unwrap().iter().enumerate() {
            assert!(text.contains(&format!("g{} = {}\n", i + 1, g.as_str().unwrap())), "{name}: generator {g}");
        }
        if let Some(z) = v["is_zero"].as_bool() {
            assert!(text.contains(&format!("zero: {z}\n")), "{name}");
        }
        if let Some(a) = v["exponent_a"].as_i64() {
            assert!(text.contains(&format!("exponent a: {a}\n")), "{name}");
        }
        for nd in v["nodes"].as_array().unwrap() {
            let b = nd["bpoly"].as_str().unwrap_or("1");
            assert!(text.contains(&format!("b(s) = {b},")), "{name}: node {nd}");
        }
        let t = v["timings"].as_object().unwrap();
        assert!(t.contains_key("total") && t.values().all(|x| x.as_f64().unwrap() >= 0.0));
    }
}

#[test]
fn output_independent_of_jobs() {
    let queries: [&[&str]; 2] = [&["lc", "--k", "3", "minors.in"], &["lambda", "--i", "0", "--j", "2", "origin.in"]];
    for args in queries {
        let base = stdout(args);
        for jobs in ["1", "2", "4"] {
            let mut a = vec!["--jobs", jobs];
            a.extend_from_slice(args);
            assert_eq!(stdout(&a), base, "{args:?} with --jobs {jobs}");
        }
    }
}

#[test]
fn single_shot_agrees_on_small_input() {
    // node b-functions differ (product versus last factor); the module does not
    let a = json(&["lc", "--k", "2", "origin.in"]);
    let b = json(&["--single-shot-localization", "lc", "--k", "2", "origin.in"]);
    assert_eq!(b["nodes"][0]["bpoly"], "s^2 + 2*s + 1");
    for key in ["exponent_a", "generators", "relations", "is_zero"] {
        assert_eq!(a[key], b[key], "{key}");
    }
}

#[test]
fn weighted_order_accepted() {
    let v = json(&["--order", "weighted:1,1,1,1", "lc", "--k", "2", "origin.in"]);
    assert_eq!(v["is_zero"], Value::Bool(false));
    assert_eq!(v["relations"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.in");
    std::fs::write(&bad, "vars: x\ngens:\nx + z\n").unwrap();
    let empty = dir.path().join("empty.in");
    std::fs::write(&empty, "vars: x\ngens:\n").unwrap();

    let out = run(&["lc", "--k", "1", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 5"));
    assert_eq!(run(&["lc", "--k", "1", empty.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["cd", "no-such-file.in"]).status.code(), Some(2));
    assert_eq!(run(&["--order", "lex", "cd", "line.in"]).status.code(), Some(2));
    assert_eq!(run(&["--order", "weighted:1,2,3", "cd", "origin.in"]).status.code(), Some(2));
    assert_eq!(run(&["lc", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["cd", "line.in"]).status.code(), Some(0));
}

#[test]
fn out_of_range_degrees_are_zero() {
    for k in ["-1", "0", "2"] {
        let v = json(&["lc", "--k", k, "line.in"]);
        assert_eq!(v["is_zero"], Value::Bool(true), "k = {k}");
    }
}

#[test]
fn localize_reports_chain_exponents() {
    let v = json(&["localize", "--factors", "--f", "chain.in"]);
    assert_eq!(v["value"]["exponents"], serde_json::json!([-1, -1]));
    let v = json(&["bpoly", "--f", "line.in"]);
    assert_eq!(v["value"]["b"], "s + 1");
    assert_eq!(v["value"]["min_integer_root"], -1);
}

#[test]
fn cache_directory_reused() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = stdout(&["--cache", d, "lc", "--k", "2", "origin.in"]);
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(entries > 0);
    let second = stdout(&["--cache", d, "lc", "--k", "2", "origin.in"]);
    assert_eq!(first, second);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), entries);
}
