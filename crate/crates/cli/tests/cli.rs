use std::process::{Command, Output};

use serde_json::Value;

fn isoword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoword"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Parses the JSON line and checks it re-serializes to the same bytes.
fn json(out: &Output) -> Value {
    let text = stdout(out);
    let line = text.trim_end();
    let value: Value = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), line);
    value
}

#[test]
fn check_exit_codes() {
    let out = isoword(&["check", "1010011", "--alphabet", "01"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not isometric"));
    assert!(stdout(&out).contains("prefix 1010"));

    let out = isoword(&["check", "11", "--alphabet", "01"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("isometric"));

    let out = isoword(&["check", "0301", "--alphabet", "0123", "--metric", "lee"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn check_usage_errors() {
    // '3' is not a binary symbol
    assert_eq!(code(&isoword(&["check", "0301"])), 2);
    assert_eq!(code(&isoword(&["check", "0301", "--alphabet", "01234", "--metric", "lee"])), 2);
    assert_eq!(code(&isoword(&["check", "", "--alphabet", "01"])), 2);
    assert_eq!(code(&isoword(&["check", "0101", "--alphabet", "0011"])), 2);
    assert_eq!(code(&isoword(&["check"])), 2);
    assert_eq!(code(&isoword(&["frobnicate"])), 2);
    let out = isoword(&["check", "0301"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown symbol"));
}

#[test]
fn check_json_schema() {
    let v = json(&isoword(&["check", "1010011", "--alphabet", "01", "--json"]));
    assert_eq!(v["word"], "1010011");
    assert_eq!(v["metric"], "hamming");
    assert_eq!(v["isometric"], false);
    assert_eq!(v["witness"]["length"], 4);
    assert_eq!(v["witness"]["distance"], 2);
    assert_eq!(v["witness"]["positions"], serde_json::json!([0, 3]));

    let v = json(&isoword(&["check", "11", "--json"]));
    assert_eq!(v["isometric"], true);
    assert!(v.get("witness").is_none());
}

#[test]
fn border_reports() {
    let v = json(&isoword(&["border", "1010011", "--k", "2", "--json"]));
    let lengths: Vec<u64> = v["borders"].as_array().unwrap().iter().map(|b| b["length"].as_u64().unwrap()).collect();
    assert_eq!(lengths, [4, 3]);
    assert_eq!(v["k"], 2);

    let v = json(&isoword(&["border", "0301", "--k", "2", "--metric", "lee", "--d", "4", "--json"]));
    assert_eq!(v["borders"][0]["length"], 2);
    assert_eq!(v["borders"].as_array().unwrap().len(), 1);
    assert_eq!(v["metric"], "lee");

    let v = json(&isoword(&["border", "1111", "--k", "2", "--json"]));
    assert_eq!(v["borders"], serde_json::json!([]));

    // Lee beyond Z_4 is allowed for border, up to d = 8
    assert_eq!(code(&isoword(&["border", "0404", "--metric", "lee", "--d", "8"])), 0);
    assert_eq!(code(&isoword(&["border", "0404", "--metric", "lee", "--d", "9"])), 2);
}

#[test]
fn check_and_border_agree() {
    let words = json(&isoword(&["enumerate", "--maxlen", "6", "--json"]));
    let bad: Vec<String> = words["words"].as_array().unwrap().iter().map(|w| w.as_str().unwrap().to_string()).collect();
    for w in ["0", "11", "0101", "1100", "010010", "110100"] {
        let checked = code(&isoword(&["check", w]));
        let border = json(&isoword(&["border", w, "--k", "2", "--json"]));
        let has = !border["borders"].as_array().unwrap().is_empty();
        assert_eq!(checked == 1, has, "{w}");
        assert_eq!(bad.contains(&w.to_string()), has, "{w}");
    }
    for w in ["02", "0301", "0120", "3333"] {
        let checked = code(&isoword(&["check", w, "--metric", "lee", "--d", "4"]));
        let border = json(&isoword(&["border", w, "--k", "2", "--metric", "lee", "--d", "4", "--json"]));
        assert_eq!(checked == 1, !border["borders"].as_array().unwrap().is_empty(), "{w}");
    }
}

#[test]
fn enumerate_lists() {
    let v = json(&isoword(&["enumerate", "--alphabet", "01", "--maxlen", "4", "--json"]));
    let words: Vec<&str> = v["words"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    assert!(words.contains(&"1100") && words.contains(&"0011"));
    assert!(!words.contains(&"11") && !words.contains(&"0101"));
    let mut sorted = words.clone();
    sorted.sort_by_key(|w| (w.len(), w.to_string()));
    assert_eq!(words, sorted);

    let v = json(&isoword(&["enumerate", "--maxlen", "1", "--json"]));
    assert_eq!(v["words"], serde_json::json!([]));

    let v = json(&isoword(&["enumerate", "--metric", "lee", "--d", "4", "--maxlen", "2", "--json"]));
    let words: Vec<&str> = v["words"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    assert!(words.contains(&"02") && words.contains(&"20"));

    assert_eq!(code(&isoword(&["enumerate", "--maxlen", "30"])), 2);
}

#[test]
fn verify_runs() {
    let out = isoword(&["verify", "0301", "--alphabet", "0123", "--metric", "lee", "--n", "4..6", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["agrees"], true);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert_eq!(results[2]["n"], 6);
    assert_eq!(results[2]["isometric"], false);
    assert_eq!(results[2]["witness"]["u"], "030001");
    assert_eq!(results[2]["witness"]["v"], "030201");
    assert_eq!(results[2]["witness"]["host_distance"], 2);

    let out = isoword(&["verify", "11", "--alphabet", "01", "--n", "2..8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).matches(": isometric").count(), 7);

    let out = isoword(&["verify", "1100", "--alphabet", "01", "--n", "4..5", "--budget", "10"]);
    assert_eq!(code(&out), 2);

    // non-isometric word whose failure lies beyond the range is not a disagreement
    let out = isoword(&["verify", "1100", "--n", "4..4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("no failure found up to n = 4"));

    // no characterization beyond Z_4: oracle only
    let out = isoword(&["verify", "02", "--metric", "lee", "--d", "5", "--n", "2..3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn bench_json() {
    let out = isoword(&["bench", "--n", "8..10", "--runs", "1", "--seed", "9", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["seed"], 9);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let n = row["n"].as_u64().unwrap();
        assert!(row["lce_queries"].as_u64().unwrap() <= 3 * (n - 1));
        assert!(row["scan_ms"].as_f64().unwrap() >= 0.0);
    }
}
