//! CLI contract checks shared by the integration and acceptance targets.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

pub type Check = fn() -> Result<(), String>;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_dir().join(name)).unwrap_or_else(|e| panic!("golden {name}: {e}"))
}

pub fn lcps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcps"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("spawn lcps")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn expect_code(out: &Output, code: i32) -> Result<(), String> {
    match out.status.code() {
        Some(c) if c == code => Ok(()),
        other => Err(format!(
            "exit {other:?}, wanted {code}; stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        )),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, wanted {want:?}"))
    }
}

fn parse_json(s: &str) -> Result<Value, String> {
    serde_json::from_str(s.trim_end()).map_err(|e| format!("bad JSON {s:?}: {e}"))
}

/// Structural checks every solve JSON object must pass.
pub fn check_solve_json(v: &Value) -> Result<(), String> {
    let keys = [
        "x_len", "y_len", "algorithm", "lcps_length", "lcps", "x_indices", "y_indices", "matches",
        "elapsed_ms",
    ];
    let obj = v.as_object().ok_or("not an object")?;
    expect_eq(obj.keys().map(String::as_str).collect::<Vec<_>>(), keys.to_vec(), "solve JSON keys")?;
    let len = v["lcps_length"].as_u64().ok_or("lcps_length")? as usize;
    expect_eq(v["lcps"].as_str().ok_or("lcps")?.len(), len, "lcps string length")?;
    for (field, bound) in [("x_indices", "x_len"), ("y_indices", "y_len")] {
        let idx: Vec<u64> = v[field]
            .as_array()
            .ok_or(field)?
            .iter()
            .map(|i| i.as_u64().ok_or(field))
            .collect::<Result<_, _>>()?;
        expect_eq(idx.len(), len, field)?;
        let hi = v[bound].as_u64().ok_or(bound)?;
        if !idx.windows(2).all(|w| w[0] < w[1]) || idx.iter().any(|&i| i < 1 || i > hi) {
            return Err(format!("{field} not strictly increasing within 1..={hi}: {idx:?}"));
        }
    }
    if !v["elapsed_ms"].is_number() {
        return Err("elapsed_ms is not a number".into());
    }
    Ok(())
}

pub fn solve_text() -> Result<(), String> {
    let out = lcps(&["solve", "-x", "aab", "-y", "aba", "--format", "text"]);
    expect_code(&out, 0)?;
    expect_eq(stdout(&out), golden("solve_aab_aba.txt"), "solve text")
}

pub fn solve_empty() -> Result<(), String> {
    let out = lcps(&["solve", "-x", "", "-y", "abc"]);
    expect_code(&out, 0)?;
    expect_eq(stdout(&out), golden("solve_empty.txt"), "solve empty")
}

pub fn solve_json() -> Result<(), String> {
    let out = lcps(&["solve", "-x", "aab", "-y", "aba", "--format", "json", "--algo", "dp"]);
    expect_code(&out, 0)?;
    let text = stdout(&out);
    expect_eq(text.lines().count(), 1, "single JSON line")?;
    let mut got = parse_json(&text)?;
    check_solve_json(&got)?;
    got.as_object_mut().unwrap().remove("elapsed_ms");
    expect_eq(got, parse_json(&golden("solve_aab_aba.json"))?, "solve JSON")
}

pub fn solve_json_every_algo() -> Result<(), String> {
    for algo in ["dp", "geom", "oracle", "auto"] {
        let out = lcps(&["solve", "-x", "abcbaxyz", "-y", "zbacabx", "--format", "json", "--algo", algo]);
        expect_code(&out, 0)?;
        let v = parse_json(&stdout(&out))?;
        check_solve_json(&v).map_err(|e| format!("{algo}: {e}"))?;
        expect_eq(v["lcps_length"].as_u64(), Some(3), algo)?;
        if algo != "auto" {
            expect_eq(v["algorithm"].as_str(), Some(algo), "algorithm field")?;
        }
    }
    Ok(())
}

pub fn solve_fasta() -> Result<(), String> {
    let out = lcps(&["solve", "--x-file", "pal.fa", "--y-file", "pal.fa", "--fasta"]);
    expect_code(&out, 0)?;
    expect_eq(stdout(&out), golden("solve_fasta_pal.txt"), "FASTA solve")?;

    let out = lcps(&["solve", "--x-file", "acgt.fa", "-y", "ACGT", "--fasta", "--format", "json"]);
    expect_code(&out, 0)?;
    let v = parse_json(&stdout(&out))?;
    expect_eq(v["x_len"].as_u64(), Some(4), "FASTA \">h\\nac\\ngt\\n\" length")?;
    expect_eq(v["matches"].as_u64(), Some(4), "ACGT matches")
}

pub fn matches_json() -> Result<(), String> {
    let out = lcps(&["matches", "--x-file", "acgt.fa", "--y-file", "two_records.fa", "--fasta"]);
    expect_code(&out, 0)?;
    expect_eq(parse_json(&stdout(&out))?, parse_json(&golden("matches_fasta.json"))?, "matches JSON")
}

fn normalize_compare(text: &str) -> String {
    text.lines()
        .map(|line| match line.rsplit_once('\t') {
            Some((head, t)) if t.ends_with("ms") => format!("{head}\t<ms>"),
            _ => line.to_owned(),
        })
        .map(|l| l + "\n")
        .collect()
}

pub fn compare_agrees() -> Result<(), String> {
    let out = lcps(&["compare", "-x", "aab", "-y", "aba"]);
    expect_code(&out, 0)?;
    expect_eq(normalize_compare(&stdout(&out)), golden("compare_aab_aba.txt"), "compare text")?;

    let out = lcps(&["compare", "-x", "", "-y", ""]);
    expect_code(&out, 0)?;
    let text = stdout(&out);
    if !text.lines().take(3).all(|l| l.split('\t').nth(1) == Some("0")) {
        return Err(format!("empty compare should report 0 everywhere: {text:?}"));
    }

    let out = lcps(&["compare", "-x", "abcba", "-y", "bacab", "--format", "json"]);
    expect_code(&out, 0)?;
    let v = parse_json(&stdout(&out))?;
    expect_eq(v["agree"].as_bool(), Some(true), "agree")?;
    let lengths: Vec<_> = v["results"].as_array().ok_or("results")?.iter().map(|r| r["lcps_length"].as_u64()).collect();
    expect_eq(lengths, vec![Some(3); 3], "compare lengths")
}

pub fn compare_skips_oracle_on_long_input() -> Result<(), String> {
    let long = "ab".repeat(15);
    let out = lcps(&["compare", "-x", &long, "-y", &long, "--format", "json"]);
    expect_code(&out, 0)?;
    let v = parse_json(&stdout(&out))?;
    expect_eq(v["results"][2]["status"].as_str(), Some("input_too_large"), "oracle status")?;
    expect_eq(v["results"][0]["lcps_length"].as_u64(), Some(29), "dp length")
}

pub fn bench_rows() -> Result<(), String> {
    let out = lcps(&["bench", "--n-list", "8,10", "--s-list", "2", "--seed", "3", "--reps", "1"]);
    expect_code(&out, 0)?;
    let text = stdout(&out);
    let rows: Vec<Value> = text.lines().map(parse_json).collect::<Result<_, _>>()?;
    expect_eq(rows.len(), 6, "bench row count")?;
    let keys = ["n", "m", "s", "seed", "algo", "r", "length", "median_ms", "status"];
    for row in &rows {
        let obj = row.as_object().ok_or("row is not an object")?;
        expect_eq(obj.keys().map(String::as_str).collect::<Vec<_>>(), keys.to_vec(), "bench keys")?;
        expect_eq(row["status"].as_str(), Some("ok"), "bench status")?;
        expect_eq(row["seed"].as_u64(), Some(3), "seed echo")?;
    }
    for chunk in rows.chunks(3) {
        expect_eq(
            chunk.iter().map(|r| r["algo"].as_str().unwrap_or("")).collect::<Vec<_>>(),
            vec!["dp", "geom", "oracle"],
            "bench algos",
        )?;
        if !chunk.iter().all(|r| r["length"] == chunk[0]["length"]) {
            return Err(format!("bench lengths differ: {chunk:?}"));
        }
    }

    let out = lcps(&["bench", "--n-list", "30", "--s-list", "2", "--reps", "1", "--max-dp-cells", "1000"]);
    expect_code(&out, 0)?;
    let first = parse_json(stdout(&out).lines().next().ok_or("no rows")?)?;
    expect_eq(first["status"].as_str(), Some("capacity_exceeded"), "dp over cap")?;
    expect_eq(first["length"].clone(), Value::Null, "length when skipped")
}

pub fn exit_codes() -> Result<(), String> {
    expect_code(&lcps(&["solve", "--algo", "bogus", "-x", "a", "-y", "b"]), 2)?;
    expect_code(&lcps(&["solve", "-x", "a"]), 2)?;
    expect_code(&lcps(&["solve", "-x", "a", "-y", "b", "--unknown-flag"]), 2)?;
    expect_code(&lcps(&["solve", "--x-file", "does-not-exist.fa", "-y", "a"]), 3)?;
    expect_code(&lcps(&["matches", "-x", "a", "--y-file", "does-not-exist.fa"]), 3)?;
    expect_code(&lcps(&["solve", "-x", "aaaa", "-y", "aaaa", "--max-dp-cells", "10", "--max-rects", "10"]), 4)?;
    expect_code(&lcps(&["solve", "-x", "aaaa", "-y", "aaaa", "--algo", "dp", "--max-dp-cells", "10"]), 4)?;
    expect_code(&lcps(&["compare", "-x", &"a".repeat(21), "-y", "aaaa", "--max-dp-cells", "10", "--max-rects", "10"]), 4)?;
    // Auto falls back to the solver that fits.
    let out = lcps(&["solve", "-x", "aaaa", "-y", "aaaa", "--max-dp-cells", "10", "--format", "json"]);
    expect_code(&out, 0)?;
    expect_eq(parse_json(&stdout(&out))?["algorithm"].as_str(), Some("geom"), "fallback")
}

pub const ALL: &[(&str, Check)] = &[
    ("solve text", solve_text),
    ("solve empty", solve_empty),
    ("solve json", solve_json),
    ("solve json every algo", solve_json_every_algo),
    ("solve fasta", solve_fasta),
    ("matches json", matches_json),
    ("compare agrees", compare_agrees),
    ("compare skips oracle", compare_skips_oracle_on_long_input),
    ("bench rows", bench_rows),
    ("exit codes", exit_codes),
];
