//! Bound reports in JSON or markdown.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use wradius_core::{BoundResult, Enclosure};

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(HarnessError::Usage(format!("unknown format `{other}`"))),
        }
    }
}

/// Serializable form of an [`Enclosure`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnclosureJson {
    pub lo: f64,
    pub hi: f64,
    pub kind: &'static str,
}

impl From<Enclosure> for EnclosureJson {
    fn from(e: Enclosure) -> Self {
        EnclosureJson {
            lo: e.lo,
            hi: e.hi,
            kind: e.kind.as_str(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputDescriptor {
    pub source: String,
    pub kind: &'static str,
    pub rows: usize,
    pub cols: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub bound: String,
    pub params: BTreeMap<String, f64>,
    pub value: f64,
    /// `value − true_w.hi`.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub input: InputDescriptor,
    pub tolerance: f64,
    pub true_w: EnclosureJson,
    /// Ascending by value.
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn new(
        input: InputDescriptor,
        true_w: Enclosure,
        tolerance: f64,
        results: &[BoundResult],
    ) -> Self {
        let mut rows: Vec<ReportRow> = results
            .iter()
            .map(|r| ReportRow {
                bound: r.id.to_string(),
                params: r.params.clone(),
                value: r.bound(),
                gap: r.bound() - true_w.hi,
            })
            .collect();
        rows.sort_by(|a, b| {
            a.value
                .total_cmp(&b.value)
                .then_with(|| a.bound.cmp(&b.bound))
        });
        Report {
            input,
            tolerance,
            true_w: true_w.into(),
            rows,
        }
    }

    /// Rows whose gap falls below `−2·tolerance`, which would contradict soundness.
    pub fn unsound_rows(&self) -> Vec<&ReportRow> {
        self.rows
            .iter()
            .filter(|r| r.gap < -2.0 * self.tolerance)
            .collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Markdown => self.markdown(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# Bounds for `{}` ({} {}×{})\n",
            self.input.source, self.input.kind, self.input.rows, self.input.cols
        );
        let _ = writeln!(
            out,
            "w(A) ∈ [{:.12}, {:.12}] ({}), tolerance {:e}\n",
            self.true_w.lo, self.true_w.hi, self.true_w.kind, self.tolerance
        );
        out.push_str("| bound | value | gap | params |\n");
        out.push_str("|---|---:|---:|---|\n");
        for r in &self.rows {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "| {} | {:.10} | {:.3e} | {} |",
                r.bound,
                r.value,
                r.gap,
                params.join(", ")
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wradius_core::bounds::evaluate_bound;
    use wradius_core::{BlockOperatorMatrix, BoundId, ComplexMatrix, EnclosureKind};

    fn results() -> Vec<BoundResult> {
        let n = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let a = BlockOperatorMatrix::off_diagonal_pair(&n, &n).unwrap();
        [BoundId::HouDu, BoundId::Aok, BoundId::Prop4]
            .into_iter()
            .map(|id| evaluate_bound(&a, id).unwrap())
            .collect()
    }

    fn input() -> InputDescriptor {
        InputDescriptor {
            source: "example".into(),
            kind: "block",
            rows: 4,
            cols: 4,
            n: Some(2),
            d: Some(2),
        }
    }

    #[test]
    fn rows_sorted_with_gaps() {
        let w = Enclosure::new(0.5 - 1e-9, 0.5 + 1e-9, EnclosureKind::Swept);
        let r = Report::new(input(), w, 1e-8, &results());
        let values: Vec<f64> = r.rows.iter().map(|x| x.value).collect();
        assert!(values.windows(2).all(|p| p[0] <= p[1]));
        assert_eq!(r.rows[0].bound, "prop4");
        assert!((r.rows[0].gap - (std::f64::consts::FRAC_1_SQRT_2 - 0.5)).abs() < 1e-8);
        assert!(r.unsound_rows().is_empty());
    }

    #[test]
    fn renders_both_formats() {
        let w = Enclosure::new(0.5, 0.5, EnclosureKind::Swept);
        let r = Report::new(input(), w, 1e-8, &results());
        let json: serde_json::Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(json["rows"].as_array().unwrap().len(), 3);
        assert_eq!(json["true_w"]["kind"], "swept");
        let md = r.render(Format::Markdown);
        assert!(md.contains("| prop4 |"));
        assert_eq!(md.lines().filter(|l| l.starts_with("| ")).count(), 4);
    }

    #[test]
    fn flags_unsound_rows() {
        let w = Enclosure::new(2.0, 2.0, EnclosureKind::Swept);
        let r = Report::new(input(), w, 1e-8, &results());
        assert_eq!(r.unsound_rows().len(), 3);
    }
}
