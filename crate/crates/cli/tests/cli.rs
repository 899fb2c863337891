use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn superjack(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superjack"))
        .args(args)
        .env("SUPERJACK_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

#[test]
fn gram_report_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = superjack(
        dir.path(),
        &["gram", "--n", "1", "--m", "1", "--degree", "2", "--theta", "symbolic", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["labels"], serde_json::json!([[2], [1, 1]]));
    assert_eq!(v["matrix"][0][1], "0");
    assert_eq!(v["matrix"][0][0], "(2*theta-2)/(theta+1)");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["n", "m", "degree", "labels", "matrix", "expected_diagonal", "pass"]);
}

#[test]
fn superjack_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = superjack(dir.path(), &["superjack", "--n", "1", "--m", "1", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(
        v,
        serde_json::json!({
            "n": 1, "m": 1,
            "terms": [{"exps": [2, 0], "coeff": "1"}, {"exps": [1, 1], "coeff": "(-2)/(theta+1)"}]
        })
    );
}

#[test]
fn jack_of_minimal_partition_is_monomial() {
    let dir = tempfile::tempdir().unwrap();
    let out = superjack(dir.path(), &["jack", "--lambda", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json_of(&out),
        serde_json::json!({"basis": "monomial", "terms": [{"partition": [1, 1], "coeff": "1"}]})
    );
}

#[test]
fn specialized_theta() {
    let dir = tempfile::tempdir().unwrap();
    let out = superjack(dir.path(), &["jack", "--lambda", "2", "--theta", "2"]);
    let v = json_of(&out);
    // P_(2) = m_2 + 2θ/(1+θ) m_11
    assert_eq!(v["terms"][1]["coeff"], "4/3");
    let out = superjack(dir.path(), &["gram", "--n", "2", "--m", "1", "--degree", "3", "--theta", "7/3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["pass"], true);
}

#[test]
fn excluded_theta_is_a_structured_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = superjack(dir.path(), &["gram", "--n", "1", "--m", "1", "--degree", "2", "--theta", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["kind"], "excluded-theta");
    let out = superjack(dir.path(), &["jack", "--lambda", "2", "--theta=-1/2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = superjack(dir.path(), &["hermite", "--n", "1", "--m", "1", "--lambda", "2,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["kind"], "not-in-fat-hook");
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["frobnicate"][..],
        &["jack", "--lambda", "2,x"],
        &["gram", "--n", "1", "--degree", "2"],
        &["jack", "--lambda", "2", "--theta", "pi"],
    ] {
        assert_eq!(superjack(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn csv_gram_is_row_major_with_label_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = superjack(dir.path(), &["gram", "--n", "1", "--m", "1", "--degree", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(&out.stdout[..]);
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["2", "1,1"]);
    let rows: Vec<Vec<String>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][1], "0");
    assert_eq!(rows[1][0], "0");
}

#[test]
fn output_is_deterministic_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["superjack", "--n", "2", "--m", "1", "--lambda", "2,1"];
    let cold = superjack(dir.path(), &args);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let warm = superjack(dir.path(), &args);
    let uncached = superjack(dir.path(), &[&args[..], &["--no-cache"]].concat());
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn corrupted_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["jack", "--lambda", "2,1"];
    let cold = superjack(dir.path(), &args);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let mut v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
        v["value"]["terms"][0]["coeff"] = "17".into();
        std::fs::write(&path, v.to_string()).unwrap();
    }
    let warm = superjack(dir.path(), &args);
    assert_eq!(warm.status.code(), Some(0));
    assert_eq!(cold.stdout, warm.stdout);
    assert!(String::from_utf8_lossy(&warm.stderr).contains("checksum mismatch"));
}

#[test]
fn check_commands() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &["kernel-check", "--n", "1", "--m", "1", "--degree", "4"],
        &["reproducing-check", "--n", "2", "--m", "1", "--degree", "2"],
        &["hermite-gram", "--n", "1", "--m", "1", "--degree", "3"],
        &["bound-check", "--n", "1", "--m", "1", "--degree", "3", "--theta", "3"],
        &["eigen", "--n", "1", "--m", "1", "--lambda", "2,1", "--r", "3"],
    ];
    for args in cases {
        let out = superjack(dir.path(), args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v = json_of(&out);
        assert!(v.get("pass").is_none_or(|p| p == true), "{args:?}");
    }
    let out = superjack(dir.path(), &["eigen", "--n", "1", "--m", "1", "--lambda", "2,1", "--r", "3"]);
    assert_eq!(json_of(&out)["eigenvalue"], "3*theta^2+3/2*theta+3");
    let out = superjack(dir.path(), &["bound-check", "--n", "1", "--m", "1", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_all_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = superjack(dir.path(), &["verify-all", "--degree", "4", "--n", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().len() > 20);
}
