//! JSON matrix files.
//!
//! A dense file:
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "kind": "dense",
//!   "rows": 2,
//!   "cols": 2,
//!   "entries": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]
//! }
//! ```
//!
//! A block file replaces `rows`/`cols` with `n`/`d` and nests `entries` as an
//! `n × n` grid of `d × d` matrices. Every entry is an `[re, im]` pair.
//!
//! [`MatrixFile::to_canonical_string`] writes every number with 17
//! significant digits, so serialize → parse → serialize is byte-identical.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;
use wradius_core::{BlockOperatorMatrix, ComplexMatrix, C64};

use crate::error::{HarnessError, Result};

pub const SCHEMA_VERSION: u64 = 1;

/// Contents of a matrix file.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixFile {
    Dense(ComplexMatrix),
    Block(BlockOperatorMatrix),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    schema_version: u64,
    kind: String,
    rows: Option<usize>,
    cols: Option<usize>,
    n: Option<usize>,
    d: Option<usize>,
    entries: Value,
}

fn dimension(msg: impl Into<String>) -> HarnessError {
    HarnessError::Dimension(msg.into())
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| HarnessError::Parse(format!("{what} must be an array")))
}

fn entry(v: &Value, at: &str) -> Result<C64> {
    let pair = array(v, at)?;
    if pair.len() != 2 {
        return Err(HarnessError::Parse(format!(
            "{at} must be an [re, im] pair"
        )));
    }
    let part = |x: &Value| {
        x.as_f64()
            .filter(|f| f.is_finite())
            .ok_or_else(|| HarnessError::Parse(format!("{at} must hold finite numbers")))
    };
    Ok(C64::new(part(&pair[0])?, part(&pair[1])?))
}

fn dense(v: &Value, rows: usize, cols: usize, at: &str) -> Result<ComplexMatrix> {
    let r = array(v, at)?;
    if r.len() != rows {
        return Err(dimension(format!(
            "{at} has {} rows, expected {rows}",
            r.len()
        )));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in r.iter().enumerate() {
        let row = array(row, at)?;
        if row.len() != cols {
            return Err(dimension(format!(
                "{at} row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (j, z) in row.iter().enumerate() {
            data.push(entry(z, &format!("{at}[{i}][{j}]"))?);
        }
    }
    Ok(ComplexMatrix::new(rows, cols, data)?)
}

fn required(v: Option<usize>, name: &str) -> Result<usize> {
    match v {
        Some(0) => Err(dimension(format!("`{name}` must be positive"))),
        Some(x) => Ok(x),
        None => Err(HarnessError::Parse(format!("missing field `{name}`"))),
    }
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))?;
        if raw.schema_version != SCHEMA_VERSION {
            return Err(HarnessError::Parse(format!(
                "unsupported schema_version {}",
                raw.schema_version
            )));
        }
        match raw.kind.as_str() {
            "dense" => {
                let rows = required(raw.rows, "rows")?;
                let cols = required(raw.cols, "cols")?;
                Ok(MatrixFile::Dense(dense(
                    &raw.entries,
                    rows,
                    cols,
                    "entries",
                )?))
            }
            "block" => {
                let n = required(raw.n, "n")?;
                let d = required(raw.d, "d")?;
                let grid = array(&raw.entries, "entries")?;
                if grid.len() != n {
                    return Err(dimension(format!(
                        "block grid has {} rows, expected {n}",
                        grid.len()
                    )));
                }
                let mut blocks = Vec::with_capacity(n * n);
                for (i, row) in grid.iter().enumerate() {
                    let row = array(row, "entries")?;
                    if row.len() != n {
                        return Err(dimension(format!(
                            "block row {i} has {} blocks, expected {n}",
                            row.len()
                        )));
                    }
                    for (j, b) in row.iter().enumerate() {
                        blocks.push(dense(b, d, d, &format!("block ({i},{j})"))?);
                    }
                }
                Ok(MatrixFile::Block(BlockOperatorMatrix::new(n, d, blocks)?))
            }
            other => Err(HarnessError::Parse(format!("unknown kind `{other}`"))),
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// The matrix itself, flattening block files.
    pub fn matrix(&self) -> ComplexMatrix {
        match self {
            MatrixFile::Dense(m) => m.clone(),
            MatrixFile::Block(b) => b.flatten(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MatrixFile::Dense(_) => "dense",
            MatrixFile::Block(_) => "block",
        }
    }

    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"schema_version\": {SCHEMA_VERSION},");
        let _ = writeln!(out, "  \"kind\": \"{}\",", self.kind());
        match self {
            MatrixFile::Dense(m) => {
                let _ = writeln!(out, "  \"rows\": {},", m.rows());
                let _ = writeln!(out, "  \"cols\": {},", m.cols());
                out.push_str("  \"entries\": ");
                write_dense(&mut out, m, 2);
            }
            MatrixFile::Block(b) => {
                let _ = writeln!(out, "  \"n\": {},", b.n());
                let _ = writeln!(out, "  \"d\": {},", b.d());
                out.push_str("  \"entries\": [\n");
                for i in 0..b.n() {
                    out.push_str("    [\n");
                    for j in 0..b.n() {
                        out.push_str("      ");
                        write_dense(&mut out, b.block(i, j), 6);
                        out.push_str(if j + 1 < b.n() { ",\n" } else { "\n" });
                    }
                    out.push_str(if i + 1 < b.n() { "    ],\n" } else { "    ]\n" });
                }
                out.push_str("  ]");
            }
        }
        out.push_str("\n}\n");
        out
    }
}

/// 17 significant digits in exponent form; round-trips every finite `f64`.
pub fn canonical_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_dense(out: &mut String, m: &ComplexMatrix, indent: usize) {
    let pad = " ".repeat(indent);
    out.push_str("[\n");
    for i in 0..m.rows() {
        out.push_str(&pad);
        out.push_str("  [");
        for j in 0..m.cols() {
            let z = m[(i, j)];
            let _ = write!(
                out,
                "[{}, {}]",
                canonical_number(z.re),
                canonical_number(z.im)
            );
            if j + 1 < m.cols() {
                out.push_str(", ");
            }
        }
        out.push(']');
        out.push_str(if i + 1 < m.rows() { ",\n" } else { "\n" });
    }
    out.push_str(&pad);
    out.push(']');
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip_is_byte_identical() {
        let m = ComplexMatrix::from_fn(2, 3, |i, j| C64::new(0.1 * i as f64 - j as f64, 1.0 / 3.0));
        let text = MatrixFile::Dense(m.clone()).to_canonical_string();
        let parsed = MatrixFile::parse(&text).unwrap();
        assert_eq!(parsed, MatrixFile::Dense(m));
        assert_eq!(parsed.to_canonical_string(), text);
    }

    #[test]
    fn block_round_trip_is_byte_identical() {
        let z = ComplexMatrix::zeros(2, 2);
        let x = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, -0.0, 2.5e-300]).unwrap();
        let b = BlockOperatorMatrix::off_diagonal_pair(&x, &z).unwrap();
        let text = MatrixFile::Block(b).to_canonical_string();
        let again = MatrixFile::parse(&text).unwrap().to_canonical_string();
        assert_eq!(again, text);
    }

    #[test]
    fn accepts_plain_integers() {
        let f = MatrixFile::parse(
            r#"{"schema_version":1,"kind":"dense","rows":1,"cols":2,"entries":[[[1,0],[0,-2]]]}"#,
        )
        .unwrap();
        assert_eq!(f.matrix()[(0, 1)], C64::new(0.0, -2.0));
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            ("not json", 2),
            (
                r#"{"schema_version":2,"kind":"dense","rows":1,"cols":1,"entries":[[[1,0]]]}"#,
                2,
            ),
            (
                r#"{"schema_version":1,"kind":"sparse","rows":1,"cols":1,"entries":[[[1,0]]]}"#,
                2,
            ),
            (
                r#"{"schema_version":1,"kind":"dense","rows":1,"cols":1,"entries":[[[1]]]}"#,
                2,
            ),
            (
                r#"{"schema_version":1,"kind":"dense","rows":2,"cols":1,"entries":[[[1,0]]]}"#,
                3,
            ),
            (
                r#"{"schema_version":1,"kind":"dense","rows":1,"cols":2,"entries":[[[1,0]]]}"#,
                3,
            ),
            (
                r#"{"schema_version":1,"kind":"dense","rows":1,"cols":1,"entries":[[[1e999,0]]]}"#,
                2,
            ),
            (
                r#"{"schema_version":1,"kind":"block","n":1,"d":2,"entries":[[[[[1,0]]]]]}"#,
                3,
            ),
        ];
        for (text, code) in cases {
            let err = MatrixFile::parse(text).unwrap_err();
            assert_eq!(err.exit_code(), code, "{text}: {err}");
        }
    }

    #[test]
    fn canonical_numbers_round_trip() {
        for x in [
            0.0,
            -0.0,
            1.0,
            0.1,
            1.0 / 3.0,
            f64::MAX,
            f64::MIN_POSITIVE,
            5e-324,
            -2.5,
        ] {
            let s = canonical_number(x);
            let back: f64 = serde_json::from_str(&s).unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }
}
