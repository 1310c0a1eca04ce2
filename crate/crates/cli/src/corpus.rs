//! Golden corpus: named CLI invocations with expected values at JSON pointers.

use std::collections::BTreeMap;
use std::path::Path;

use clap::Parser;
use lieembed::liecore::Subspace;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::Output;
use crate::error::{CliError, Result};
use crate::input::{load_algebra, parse_subspace, read_corpus_value};
use crate::{run, Cli, Command};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GoldenCase {
    pub name: String,
    /// Where the expected values come from.
    #[serde(default)]
    pub source: String,
    /// Arguments after the program name, e.g. `["embed", "so(2,2)", "--mode", "torus", "--subspace", "e2"]`.
    pub args: Vec<String>,
    /// JSON pointer into the command output mapped to the expected value.
    /// `{"span": [...]}` compares subspaces of the input algebra and
    /// `{"set": [...]}` compares arrays without regard to order.
    pub expect: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Corpus {
    #[serde(default)]
    pub cases: Vec<GoldenCase>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub pointer: String,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diffs: Vec<Mismatch>,
}

pub fn load(path: &Path) -> Result<Corpus> {
    let v = read_corpus_value(path)?;
    serde_json::from_value(v).map_err(|e| CliError::Json(path.display().to_string(), e.to_string()))
}

fn span_of(input: &str, items: &[Value]) -> Result<(Subspace, lieembed::liecore::LieAlgebra)> {
    let l = load_algebra(input)?;
    let spec: Vec<String> = items.iter().map(|v| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())).collect();
    Ok((parse_subspace(&l, &spec.join(","))?, l))
}

fn canonical_set(items: &[Value]) -> Vec<String> {
    let mut v: Vec<String> = items.iter().map(Value::to_string).collect();
    v.sort();
    v
}

/// Whether `actual` matches `expected` for the case's input algebra.
fn matches(input: Option<&str>, expected: &Value, actual: &Value) -> Result<bool> {
    if let Some(want) = expected.get("span").and_then(Value::as_array) {
        let (Some(input), Some(got)) = (input, actual.as_array()) else { return Ok(false) };
        let (want, _) = span_of(input, want)?;
        let (got, _) = span_of(input, got)?;
        return Ok(want == got);
    }
    if let Some(want) = expected.get("set").and_then(Value::as_array) {
        let Some(got) = actual.as_array() else { return Ok(false) };
        return Ok(canonical_set(want) == canonical_set(got));
    }
    Ok(expected == actual)
}

fn run_case(case: &GoldenCase) -> CaseReport {
    let report = |error: Option<String>, diffs: Vec<Mismatch>| CaseReport {
        name: case.name.clone(),
        passed: error.is_none() && diffs.is_empty(),
        error,
        diffs,
    };
    let argv = std::iter::once("lieembed".to_string()).chain(case.args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => return report(Some(e.to_string().trim().to_string()), vec![]),
    };
    if matches!(cli.command, Command::Verify { .. }) {
        return report(Some("corpus cases cannot run verify".into()), vec![]);
    }
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => return report(Some(format!("exit {}: {e}", e.exit_code())), vec![]),
    };
    let input = case.args.get(1).map(String::as_str);
    let mut diffs = vec![];
    for (ptr, want) in &case.expect {
        let got = out.json.pointer(ptr).cloned().unwrap_or(Value::Null);
        match matches(input, want, &got) {
            Ok(true) => {}
            Ok(false) => diffs.push(Mismatch { pointer: ptr.clone(), expected: want.clone(), actual: got }),
            Err(e) => return report(Some(e.to_string()), vec![]),
        }
    }
    report(None, diffs)
}

/// Runs all cases in parallel; the report is sorted by case name.
pub fn verify(path: &Path) -> Result<Output> {
    let corpus = load(path)?;
    let mut reports: Vec<CaseReport> = corpus.cases.par_iter().map(run_case).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let failed = reports.iter().filter(|r| !r.passed).count();
    let mut text = String::new();
    for r in &reports {
        text += &format!("{} {}\n", if r.passed { "PASS" } else { "FAIL" }, r.name);
        if let Some(e) = &r.error {
            text += &format!("  error: {e}\n");
        }
        for d in &r.diffs {
            text += &format!("  {}: expected {}, got {}\n", d.pointer, d.expected, d.actual);
        }
    }
    text += &format!("{} of {} cases passed\n", reports.len() - failed, reports.len());
    let json = json!({ "cases": reports.len(), "passed": reports.len() - failed, "failed": failed, "results": reports });
    Ok(Output { json, text, failures: failed })
}
