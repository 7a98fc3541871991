//! Invariant checks over a random ensemble.
//!
//! Each instance is checked independently (in parallel); the summary is
//! keyed and sorted by property name, so it does not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use wradius_core::bounds::{single_operator_bound, BlockBounds, SingleVariant};
use wradius_core::matcore::operator_norm;
use wradius_core::radius::{default_tolerance, numerical_radius};
use wradius_core::specfun::{contraction_factorization, lemma_slack, FunctionPair};
use wradius_core::{BlockOperatorMatrix, BoundId, C64};

use crate::ensemble::{EnsembleKind, EnsembleSpec};
use crate::error::Result;
use crate::matfile::MatrixFile;

pub const SOUND_TOL: f64 = 1e-8;
pub const ENTRY_TOL: f64 = 1e-10;
pub const FACTOR_RTOL: f64 = 1e-8;
pub const SLACK_TOL: f64 = 1e-10;
pub const IDENTITY_RTOL: f64 = 1e-7;
const TS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertySummary {
    pub property: String,
    pub checked: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub instance: usize,
    pub seed: u64,
    pub property: String,
    pub detail: String,
    /// Canonical matrix file of the offending instance.
    pub matrix: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub spec: EnsembleSpec,
    pub properties: Vec<PropertySummary>,
    pub violations: Vec<Violation>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render_markdown(&self) -> String {
        let mut out = format!(
            "# verify: {} × {} (n={}, d={}, seed={})\n\n",
            self.spec.count, self.spec.ensemble, self.spec.n, self.spec.d, self.spec.seed
        );
        out.push_str("| property | checked | violations |\n|---|---:|---:|\n");
        for p in &self.properties {
            let _ = writeln!(out, "| {} | {} | {} |", p.property, p.checked, p.violations);
        }
        for v in &self.violations {
            let _ = writeln!(
                out,
                "\nviolation: instance {} (seed {}), {}: {}\n```json\n{}```",
                v.instance, v.seed, v.property, v.detail, v.matrix
            );
        }
        out
    }
}

/// One property evaluation: `Err` carries the violation detail.
type Check = (&'static str, std::result::Result<(), String>);

fn check(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Check {
    (name, if ok { Ok(()) } else { Err(detail()) })
}

fn check_instance(spec: &EnsembleSpec, index: usize) -> Result<Vec<Check>> {
    let a = spec.instance(index);
    let mut rng = spec.check_rng(index);
    let mut out = Vec::new();
    let flat = a.flatten();
    let tol = default_tolerance(&flat);
    let w = numerical_radius(&flat, tol)?;
    let norm = operator_norm(&flat);

    out.push(check(
        "radius.norm_sandwich",
        0.5 * norm.lo <= w.hi && w.lo <= norm.hi + tol,
        || format!("w = {w}, ‖A‖ = {norm}"),
    ));
    match spec.ensemble {
        EnsembleKind::Nilpotent => {
            let half = 0.5 * norm.mid();
            out.push(check(
                "radius.square_zero_half_norm",
                (w.mid() - half).abs() <= IDENTITY_RTOL * half.max(tol),
                || format!("w = {w}, ½‖A‖ = {half}"),
            ));
        }
        EnsembleKind::Normal | EnsembleKind::Positive => {
            out.push(check(
                "radius.normal_equals_norm",
                (w.mid() - norm.mid()).abs() <= 2.0 * tol,
                || format!("w = {w}, ‖A‖ = {norm}"),
            ));
        }
        _ => {}
    }

    block_checks(&a, w.lo, &mut out)?;

    for variant in [SingleVariant::KittanehSum, SingleVariant::KittanehSq]
        .into_iter()
        .chain(
            TS.iter()
                .flat_map(|&t| [SingleVariant::Prop1(t), SingleVariant::P112(t)]),
        )
    {
        let v = single_operator_bound(&flat, variant)?.bound();
        out.push(check("bounds.soundness", v + SOUND_TOL >= w.lo, || {
            format!("{} = {v} < w.lo = {}", variant.id(), w.lo)
        }));
    }
    let min = single_operator_bound(&flat, SingleVariant::Prop1Min)?.bound();
    out.push(check(
        "bounds.prop1_min_chain",
        w.lo <= min + SOUND_TOL && min <= norm.hi + ENTRY_TOL * (1.0 + norm.hi),
        || format!("w = {w}, prop1_min = {min}, ‖A‖ = {norm}"),
    ));

    for block in a.blocks() {
        let t: f64 = rng.random();
        let pair = FunctionPair::power(t)?;
        let cf = contraction_factorization(block, &pair)?;
        let bn = operator_norm(block).hi;
        let residual = operator_norm(&(&cf.reconstruct() - block)).hi;
        let k = operator_norm(&cf.k).hi;
        out.push(check(
            "specfun.factorization",
            residual <= FACTOR_RTOL * (1.0 + bn) && k <= 1.0 + ENTRY_TOL,
            || format!("t = {t}: residual {residual:e}, ‖K‖ = {k}"),
        ));
        let x = unit_vector(&mut rng, block.rows());
        let y = unit_vector(&mut rng, block.rows());
        let slack = lemma_slack(block, &pair, &x, &y)?;
        out.push(check("specfun.lemma", slack >= -SLACK_TOL, || {
            format!("t = {t}: slack {slack:e}")
        }));
    }
    Ok(out)
}

fn block_checks(a: &BlockOperatorMatrix, w_lo: f64, out: &mut Vec<Check>) -> Result<()> {
    let b = BlockBounds::new(a)?;
    for id in BoundId::block_catalogue(&TS) {
        let v = b.evaluate(id)?.bound();
        out.push(check("bounds.soundness", v + SOUND_TOL >= w_lo, || {
            format!("{id} = {v} < w.lo = {w_lo}")
        }));
    }
    let chain = [
        BoundId::Rem12I,
        BoundId::SqrtSum,
        BoundId::Aok,
        BoundId::HouDu,
    ]
    .map(|id| b.evaluate(id).map(|r| (id, r.bound())));
    let chain = chain
        .into_iter()
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for pair in chain.windows(2) {
        let ((lo_id, lo), (hi_id, hi)) = (pair[0], pair[1]);
        out.push(check("bounds.ordering", lo <= hi + SOUND_TOL, || {
            format!("{lo_id} = {lo} > {hi_id} = {hi}")
        }));
    }
    let (aok, _) = b.aux(BoundId::Aok)?;
    let scale = 1.0 + aok.max_abs();
    for t in TS {
        let (cor, _) = b.aux(BoundId::Cor11(t))?;
        let worst = (0..a.n())
            .flat_map(|i| (0..a.n()).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| cor[(i, j)].re - aok[(i, j)].re)
            .fold(f64::NEG_INFINITY, f64::max);
        out.push(check(
            "bounds.cor1_1_entrywise",
            a.n() < 2 || worst <= ENTRY_TOL * scale,
            || format!("cor1_1(t={t}) exceeds aok by {worst:e}"),
        ));
    }
    Ok(())
}

fn unit_vector(rng: &mut impl Rng, n: usize) -> Vec<C64> {
    let v: Vec<C64> = (0..n)
        .map(|_| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm = v
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    v.into_iter().map(|z| z / norm).collect()
}

pub fn verify(spec: &EnsembleSpec) -> Result<VerifySummary> {
    let per_instance: Vec<(usize, Vec<Check>)> = (0..spec.count)
        .into_par_iter()
        .map(|k| check_instance(spec, k).map(|c| (k, c)))
        .collect::<Result<_>>()?;
    let mut counts: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
    let mut violations = Vec::new();
    for (k, checks) in per_instance {
        for (name, outcome) in checks {
            let entry = counts.entry(name).or_default();
            entry.0 += 1;
            if let Err(detail) = outcome {
                entry.1 += 1;
                violations.push(Violation {
                    instance: k,
                    seed: spec.seed,
                    property: name.to_string(),
                    detail,
                    matrix: MatrixFile::Block(spec.instance(k)).to_canonical_string(),
                });
            }
        }
    }
    violations.sort_by(|a, b| (a.instance, &a.property).cmp(&(b.instance, &b.property)));
    Ok(VerifySummary {
        spec: *spec,
        properties: counts
            .into_iter()
            .map(|(p, (checked, violations))| PropertySummary {
                property: p.to_string(),
                checked,
                violations,
            })
            .collect(),
        violations,
    })
}
