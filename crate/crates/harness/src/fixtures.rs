//! Bundled matrix files and the published values they reproduce.

use serde::Serialize;
use wradius_core::BoundId;

use crate::catalogue::evaluate;
use crate::error::Result;
use crate::matfile::MatrixFile;

/// `(name, contents)` of every bundled fixture.
pub const FILES: [(&str, &str); 4] = [
    (
        "nilpotent_2x2",
        include_str!("../fixtures/nilpotent_2x2.json"),
    ),
    ("shift23", include_str!("../fixtures/shift23.json")),
    ("identity", include_str!("../fixtures/identity.json")),
    (
        "paper_block_example",
        include_str!("../fixtures/paper_block_example.json"),
    ),
];

pub fn load(name: &str) -> Option<MatrixFile> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| MatrixFile::parse(text).expect("bundled fixture parses"))
}

/// A published bound value on a bundled fixture.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expectation {
    pub fixture: &'static str,
    pub bound: &'static str,
    pub t: Option<f64>,
    pub expected: f64,
    pub tolerance: f64,
}

/// Values as printed, hence the rounded literals.
#[allow(clippy::approx_constant)]
pub const EXPECTATIONS: [Expectation; 4] = [
    Expectation {
        fixture: "paper_block_example",
        bound: "prop4",
        t: None,
        expected: 0.7071068,
        tolerance: 1e-6,
    },
    Expectation {
        fixture: "paper_block_example",
        bound: "aok",
        t: None,
        expected: 1.0,
        tolerance: 1e-6,
    },
    Expectation {
        fixture: "shift23",
        bound: "prop1_min",
        t: None,
        expected: 2.5,
        tolerance: 1e-6,
    },
    Expectation {
        fixture: "shift23",
        bound: "prop1",
        t: Some(0.5),
        expected: 2.7247449,
        tolerance: 1e-6,
    },
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReproduceRow {
    pub fixture: &'static str,
    pub bound: String,
    pub expected: f64,
    pub computed: f64,
    pub diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

pub fn reproduce() -> Result<Vec<ReproduceRow>> {
    EXPECTATIONS
        .iter()
        .map(|e| {
            let file = load(e.fixture).expect("expectation names a bundled fixture");
            let id = BoundId::parse(e.bound, e.t)?;
            let computed = evaluate(&file, &[id])?[0].bound();
            let diff = computed - e.expected;
            Ok(ReproduceRow {
                fixture: e.fixture,
                bound: id.to_string(),
                expected: e.expected,
                computed,
                diff,
                tolerance: e.tolerance,
                pass: diff.abs() <= e.tolerance,
            })
        })
        .collect()
}

pub fn render_markdown(rows: &[ReproduceRow]) -> String {
    let mut out = String::from("| fixture | bound | expected | computed | diff | tol | status |\n");
    out.push_str("|---|---|---:|---:|---:|---:|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {:.10} | {:.2e} | {:e} | {} |\n",
            r.fixture,
            r.bound,
            r.expected,
            r.computed,
            r.diff,
            r.tolerance,
            if r.pass { "ok" } else { "MISMATCH" }
        ));
    }
    out
}
