//! wasm-bindgen bindings for the demo page in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON string;
//! errors surface as JS exceptions. The alphabet doubles as `Z_d` with
//! `d = alphabet.len()`.

use isoword::cube::{CubeOracle, CubeCheckResult};
use isoword::{is_isometric, Alphabet, BorderEntry, Detector, LceIndex, Metric, Word};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Vertex cap for cube checks run in the page.
pub const PAGE_BUDGET: u64 = 1 << 18;

fn parse(word: &str, alphabet: &str) -> Result<(Word, usize), String> {
    let alphabet = Alphabet::new(alphabet).map_err(|e| e.to_string())?;
    let word = Word::parse(word, &alphabet).map_err(|e| e.to_string())?;
    if word.is_empty() {
        return Err("enter a non-empty word".into());
    }
    Ok((word, alphabet.len()))
}

fn metric(name: &str) -> Result<Metric, String> {
    match name {
        "hamming" => Ok(Metric::Hamming),
        "lee" => Ok(Metric::Lee),
        other => Err(format!("unknown metric {other:?}")),
    }
}

fn entry_json(word: &Word, entry: &BorderEntry) -> Value {
    let n = word.len();
    json!({
        "length": entry.length,
        "positions": entry.mismatch_positions,
        "distance": entry.distance,
        "prefix": word.render(0..entry.length),
        "suffix": word.render(n - entry.length..n),
    })
}

pub fn check_value(word: &str, alphabet: &str, metric_name: &str) -> Result<Value, String> {
    let (word, d) = parse(word, alphabet)?;
    let metric = metric(metric_name)?;
    let verdict = is_isometric(&word, metric, d).map_err(|e| e.to_string())?;
    Ok(json!({
        "word": word.to_string(),
        "metric": metric.name(),
        "isometric": verdict.isometric,
        "witness": verdict.witness.as_ref().map(|w| entry_json(&word, w)),
    }))
}

pub fn borders_value(word: &str, alphabet: &str, k: usize, metric_name: &str) -> Result<Value, String> {
    let (word, d) = parse(word, alphabet)?;
    let index = LceIndex::build(&word).map_err(|e| e.to_string())?;
    let report = match metric(metric_name)? {
        Metric::Hamming => Detector::hamming(&index).all(k, &mut ()),
        Metric::Lee => Detector::lee(&index, d).map_err(|e| e.to_string())?.all(k, &mut ()),
    };
    Ok(json!({
        "word": word.to_string(),
        "k": k,
        "metric": report.metric.name(),
        "borders": report.borders.iter().map(|b| entry_json(&word, b)).collect::<Vec<_>>(),
    }))
}

fn cube_row(r: &CubeCheckResult, vertices: usize) -> Value {
    json!({
        "n": r.n,
        "vertices": vertices,
        "isometric": r.isometric,
        "witness": r.witness.as_ref().map(|w| json!({
            "u": w.u.to_string(),
            "v": w.v.to_string(),
            "host_distance": w.host_distance,
            "subgraph_distance": w.subgraph_distance,
        })),
    })
}

/// Embedding checks of the `f`-free subgraph for `n = |f| ..= max_n`.
pub fn cube_value(word: &str, alphabet: &str, max_n: usize, metric_name: &str) -> Result<Value, String> {
    let (f, d) = parse(word, alphabet)?;
    let metric = metric(metric_name)?;
    let oracle = CubeOracle::with_budget(PAGE_BUDGET);
    let mut rows = Vec::new();
    for n in f.len()..=max_n.max(f.len()) {
        let vertices = oracle.enumerate_f_free(&f, n, d).map_err(|e| e.to_string())?.len();
        let r = oracle
            .check_isometric_embedding(&f, n, d, metric)
            .map_err(|e| e.to_string())?;
        rows.push(cube_row(&r, vertices));
    }
    Ok(json!({ "word": f.to_string(), "metric": metric.name(), "d": d, "rows": rows }))
}

fn export(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn check(word: &str, alphabet: &str, metric: &str) -> Result<String, JsError> {
    export(check_value(word, alphabet, metric))
}

#[wasm_bindgen]
pub fn borders(word: &str, alphabet: &str, k: usize, metric: &str) -> Result<String, JsError> {
    export(borders_value(word, alphabet, k, metric))
}

#[wasm_bindgen]
pub fn cube(word: &str, alphabet: &str, max_n: usize, metric: &str) -> Result<String, JsError> {
    export(cube_value(word, alphabet, max_n, metric))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_reports_witness() {
        let v = check_value("1010011", "01", "hamming").unwrap();
        assert_eq!(v["isometric"], false);
        assert_eq!(v["witness"]["prefix"], "1010");
        assert_eq!(v["witness"]["suffix"], "0011");
        let v = check_value("11", "01", "hamming").unwrap();
        assert_eq!(v["isometric"], true);
        assert!(v["witness"].is_null());
    }

    #[test]
    fn errors_are_messages() {
        assert!(check_value("0301", "01", "hamming").unwrap_err().contains("unknown symbol"));
        assert!(check_value("0301", "01234", "lee").is_err());
        assert!(check_value("01", "01", "manhattan").is_err());
        assert!(check_value("", "01", "hamming").is_err());
    }

    #[test]
    fn borders_list() {
        let v = borders_value("0301", "0123", 2, "lee").unwrap();
        assert_eq!(v["borders"].as_array().unwrap().len(), 1);
        assert_eq!(v["borders"][0]["positions"], json!([1]));
    }

    #[test]
    fn cube_sweep() {
        let v = cube_value("0301", "0123", 6, "lee").unwrap();
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[2]["isometric"], false);
        assert_eq!(rows[2]["witness"]["u"], "030001");
        let v = cube_value("11", "01", 5, "hamming").unwrap();
        let counts: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["vertices"].as_u64().unwrap()).collect();
        assert_eq!(counts, [3, 5, 8, 13]);
        assert!(cube_value("0", "0123", 12, "lee").is_err());
    }
}
