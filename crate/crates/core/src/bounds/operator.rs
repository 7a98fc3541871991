//! Bounds for two-block matrices, single operators, products and commutators,
//! obtained by specializing the block-matrix bounds.

use std::collections::BTreeMap;

use super::id::{BoundId, BoundResult};
use super::psd_norm;
use crate::error::{Error, Result};
use crate::matcore::{operator_norm, ComplexMatrix};
use crate::radius::{default_tolerance, numerical_radius, w_nonneg};
use crate::scalar::{minimize_on_unit_interval, T_GRID_POINTS};
use crate::specfun::PolarFactors;

/// Bounds for `w([[0, A], [B, 0]])` and `w([[C, A], [B, D]])`.
#[derive(Debug, Clone)]
pub enum TwoBlockVariant {
    Prop5(f64),
    P2Min,
    P22 { c: ComplexMatrix, d: ComplexMatrix },
}

/// Bounds for `w(A)` of a single operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SingleVariant {
    Prop1(f64),
    Prop1Min,
    P112(f64),
    KittanehSum,
    KittanehSq,
}

impl SingleVariant {
    pub fn id(&self) -> BoundId {
        match *self {
            SingleVariant::Prop1(t) => BoundId::Prop1(t),
            SingleVariant::Prop1Min => BoundId::Prop1Min,
            SingleVariant::P112(t) => BoundId::P112(t),
            SingleVariant::KittanehSum => BoundId::KittanehSum,
            SingleVariant::KittanehSq => BoundId::KittanehSq,
        }
    }

    pub fn from_id(id: BoundId) -> Result<Self> {
        Ok(match id {
            BoundId::Prop1(t) => SingleVariant::Prop1(t),
            BoundId::Prop1Min => SingleVariant::Prop1Min,
            BoundId::P112(t) => SingleVariant::P112(t),
            BoundId::KittanehSum => SingleVariant::KittanehSum,
            BoundId::KittanehSq => SingleVariant::KittanehSq,
            other => return Err(Error::NotApplicable(other.to_string())),
        })
    }
}

/// Exponent pattern of the `w(AB ± CD)` bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumProductVariant {
    Th3,
    Th4,
}

fn same_square(pairs: &[&ComplexMatrix], op: &'static str) -> Result<usize> {
    let d = pairs[0].ensure_square()?;
    for m in &pairs[1..] {
        if m.shape() != (d, d) {
            return Err(Error::DimensionMismatch {
                op,
                left: pairs[0].shape(),
                right: m.shape(),
            });
        }
    }
    Ok(d)
}

fn check_t(t: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&t) {
        Ok(t)
    } else {
        Err(Error::ExponentOutOfRange(t))
    }
}

/// `‖|A|^{2t} + |B*|^{2t}‖ · ‖|A*|^{2(1−t)} + |B|^{2(1−t)}‖`.
fn equal_term(a: &PolarFactors, b: &PolarFactors, t: f64) -> f64 {
    let first = &a.abs_power(2.0 * t) + &b.abs_adjoint_power(2.0 * t);
    let second = &a.abs_adjoint_power(2.0 * (1.0 - t)) + &b.abs_power(2.0 * (1.0 - t));
    psd_norm(&first) * psd_norm(&second)
}

/// `‖|A|^{2t} + |B*|^{2(1−t)}‖ · ‖|A*|^{2(1−t)} + |B|^{2t}‖`.
fn mixed_term(a: &PolarFactors, b: &PolarFactors, t: f64) -> f64 {
    let first = &a.abs_power(2.0 * t) + &b.abs_adjoint_power(2.0 * (1.0 - t));
    let second = &a.abs_adjoint_power(2.0 * (1.0 - t)) + &b.abs_power(2.0 * t);
    psd_norm(&first) * psd_norm(&second)
}

fn finish(
    id: BoundId,
    aux: ComplexMatrix,
    mut params: BTreeMap<String, f64>,
) -> Result<BoundResult> {
    if let Some(t) = id.t() {
        params.insert("t".to_string(), t);
    }
    let value = w_nonneg(&aux)?;
    Ok(BoundResult {
        id,
        params,
        aux,
        value,
        argmins: None,
    })
}

fn upper_pair(x: f64) -> Result<ComplexMatrix> {
    ComplexMatrix::from_real(2, 2, &[0.0, x, 0.0, 0.0])
}

fn symmetric_pair(x: f64) -> Result<ComplexMatrix> {
    ComplexMatrix::from_real(2, 2, &[0.0, x, x, 0.0])
}

fn scalar(x: f64) -> Result<ComplexMatrix> {
    ComplexMatrix::from_real(1, 1, &[x])
}

/// `min{√(½‖|A|²+|B*|²‖), √(½‖|A*|²+|B|²‖)}`, first operand on ties.
fn squared_moduli_min(a: &PolarFactors, b: &PolarFactors) -> f64 {
    let first = psd_norm(&(&a.abs_power(2.0) + &b.abs_adjoint_power(2.0)));
    let second = psd_norm(&(&a.abs_adjoint_power(2.0) + &b.abs_power(2.0)));
    let m = if second < first { second } else { first };
    (0.5 * m).sqrt()
}

/// Upper bounds for `w([[0, A], [B, 0]])`, or `w([[C, A], [B, D]])` for `P22`.
pub fn two_block_bound(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    variant: &TwoBlockVariant,
) -> Result<BoundResult> {
    same_square(&[a, b], "two_block_bound")?;
    let (pa, pb) = (PolarFactors::new(a)?, PolarFactors::new(b)?);
    match variant {
        TwoBlockVariant::Prop5(t) => {
            let t = check_t(*t)?;
            let entry = equal_term(&pa, &pb, t).sqrt();
            finish(BoundId::Prop5(t), upper_pair(entry)?, BTreeMap::new())
        }
        TwoBlockVariant::P2Min => {
            let entry = squared_moduli_min(&pa, &pb);
            finish(BoundId::P2Min, symmetric_pair(entry)?, BTreeMap::new())
        }
        TwoBlockVariant::P22 { c, d } => {
            same_square(&[a, c, d], "two_block_bound")?;
            let wc = numerical_radius(c, default_tolerance(c))?.hi;
            let wd = numerical_radius(d, default_tolerance(d))?.hi;
            let m = squared_moduli_min(&pa, &pb);
            let aux = ComplexMatrix::from_real(2, 2, &[wc, m, m, wd])?;
            let params = BTreeMap::from([("w_c".to_string(), wc), ("w_d".to_string(), wd)]);
            finish(BoundId::P22, aux, params)
        }
    }
}

/// `‖A‖^t · ½‖|A|^{1−t} + |A*|^{1−t}‖`.
fn prop1_value(p: &PolarFactors, t: f64) -> f64 {
    let s = 1.0 - t;
    let sum = &p.abs_power(s) + &p.abs_adjoint_power(s);
    crate::specfun::power(p.norm(), t) * 0.5 * psd_norm(&sum)
}

/// Upper bounds for `w(A)` of a single square operator.
pub fn single_operator_bound(a: &ComplexMatrix, variant: SingleVariant) -> Result<BoundResult> {
    a.ensure_square()?;
    let p = PolarFactors::new(a)?;
    match variant {
        SingleVariant::Prop1(t) => {
            let t = check_t(t)?;
            finish(variant.id(), scalar(prop1_value(&p, t))?, BTreeMap::new())
        }
        SingleVariant::Prop1Min => {
            let m = minimize_on_unit_interval(|t| prop1_value(&p, t));
            let params = BTreeMap::from([
                ("argmin_t".to_string(), m.t),
                ("grid_points".to_string(), T_GRID_POINTS as f64),
            ]);
            finish(variant.id(), scalar(m.value)?, params)
        }
        SingleVariant::P112(t) => {
            let t = check_t(t)?;
            finish(
                variant.id(),
                upper_pair(equal_term(&p, &p, t).sqrt())?,
                BTreeMap::new(),
            )
        }
        SingleVariant::KittanehSum => {
            let entry = psd_norm(&(&p.abs() + &p.abs_adjoint()));
            finish(variant.id(), upper_pair(entry)?, BTreeMap::new())
        }
        SingleVariant::KittanehSq => finish(
            variant.id(),
            symmetric_pair(squared_moduli_min(&p, &p))?,
            BTreeMap::new(),
        ),
    }
}

/// `w(AB) ≤ ¼‖|A|^{2t} + |B*|^{2t}‖ ‖|A*|^{2(1−t)} + |B|^{2(1−t)}‖`.
pub fn product_bound(a: &ComplexMatrix, b: &ComplexMatrix, t: f64) -> Result<BoundResult> {
    same_square(&[a, b], "product_bound")?;
    let t = check_t(t)?;
    let value = 0.25 * equal_term(&PolarFactors::new(a)?, &PolarFactors::new(b)?, t);
    finish(BoundId::Product(t), scalar(value)?, BTreeMap::new())
}

/// Bound on both `w(AB + CD)` and `w(AB − CD)`.
pub fn sum_product_bound(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    d: &ComplexMatrix,
    variant: SumProductVariant,
) -> Result<BoundResult> {
    same_square(&[a, b, c, d], "sum_product_bound")?;
    let [pa, pb, pc, pd] = [a, b, c, d].map(PolarFactors::new);
    let (pa, pb, pc, pd) = (pa?, pb?, pc?, pd?);
    let term = match variant {
        SumProductVariant::Th3 => equal_term,
        SumProductVariant::Th4 => mixed_term,
    };
    let ab = minimize_on_unit_interval(|t| term(&pa, &pb, t));
    let cd = minimize_on_unit_interval(|t| term(&pc, &pd, t));
    let id = match variant {
        SumProductVariant::Th3 => BoundId::Th3,
        SumProductVariant::Th4 => BoundId::Th4,
    };
    let params = BTreeMap::from([("t_ab".to_string(), ab.t), ("t_cd".to_string(), cd.t)]);
    finish(id, scalar(0.25 * (ab.value + cd.value))?, params)
}

/// Bound on both `w(AB + BA)` and `w(AB − BA)`.
///
/// `params["half_t_value"]` holds the `t = 1/2` evaluation
/// `½‖|A| + |B*|‖ ‖|B| + |A*|‖`.
pub fn commutator_bound(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<BoundResult> {
    same_square(&[a, b], "commutator_bound")?;
    let (pa, pb) = (PolarFactors::new(a)?, PolarFactors::new(b)?);
    let ab = minimize_on_unit_interval(|t| equal_term(&pa, &pb, t));
    let ba = minimize_on_unit_interval(|t| equal_term(&pb, &pa, t));
    let half = 0.5
        * psd_norm(&(&pa.abs() + &pb.abs_adjoint()))
        * psd_norm(&(&pb.abs() + &pa.abs_adjoint()));
    let params = BTreeMap::from([
        ("t_ab".to_string(), ab.t),
        ("t_ba".to_string(), ba.t),
        ("half_t_value".to_string(), half),
    ]);
    finish(
        BoundId::Commutator,
        scalar(0.25 * (ab.value + ba.value))?,
        params,
    )
}

/// `½‖A + B‖`, a lower bound for `w([[0, A], [B*, 0]])`.
pub fn lower_bound_sum(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    same_square(&[a, b], "lower_bound_sum")?;
    Ok(0.5 * operator_norm(&(a + b)).mid())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: usize, cols: usize, v: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real(rows, cols, v).unwrap()
    }

    fn shift23() -> ComplexMatrix {
        real(3, 3, &[0.0, 2.0, 0.0, 0.0, 0.0, 3.0, 0.0, 0.0, 0.0])
    }

    #[test]
    fn prop1_half_on_weighted_shift() {
        let r = single_operator_bound(&shift23(), SingleVariant::Prop1(0.5)).unwrap();
        assert!((r.bound() - (3.0 + 6f64.sqrt()) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn prop1_min_on_weighted_shift() {
        let r = single_operator_bound(&shift23(), SingleVariant::Prop1Min).unwrap();
        assert!((r.bound() - 2.5).abs() < 1e-9);
        assert_eq!(r.params["argmin_t"], 0.0);
    }

    #[test]
    fn prop1_identity_is_tight() {
        let i = ComplexMatrix::identity(2);
        for t in [0.0, 0.3, 1.0] {
            let r = single_operator_bound(&i, SingleVariant::Prop1(t)).unwrap();
            assert!((r.bound() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn prop5_positive_scalars() {
        let r = two_block_bound(
            &real(1, 1, &[1.0]),
            &real(1, 1, &[3.0]),
            &TwoBlockVariant::Prop5(0.5),
        )
        .unwrap();
        assert!((r.bound() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn p22_reduces_to_p2_min_with_zero_diagonal() {
        let a = real(2, 2, &[1.0, 2.0, 0.0, -1.0]);
        let b = real(2, 2, &[0.5, 0.0, 1.0, 1.0]);
        let z = ComplexMatrix::zeros(2, 2);
        let p2 = two_block_bound(&a, &b, &TwoBlockVariant::P2Min).unwrap();
        let p22 = two_block_bound(&a, &b, &TwoBlockVariant::P22 { c: z.clone(), d: z }).unwrap();
        assert!((p2.bound() - p22.bound()).abs() < 1e-12);
    }

    #[test]
    fn product_of_identities() {
        let i = ComplexMatrix::identity(2);
        let r = product_bound(&i, &i, 0.5).unwrap();
        assert!((r.bound() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sum_product_identities() {
        let i = ComplexMatrix::identity(2);
        for v in [SumProductVariant::Th3, SumProductVariant::Th4] {
            let r = sum_product_bound(&i, &i, &i, &i, v).unwrap();
            assert!((r.bound() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn commutator_of_shifts() {
        let a = real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let b = a.adjoint();
        let r = commutator_bound(&a, &b).unwrap();
        assert!((r.params["half_t_value"] - 2.0).abs() < 1e-12);
        assert!(r.bound() >= 1.0 - 1e-12);
        let i = ComplexMatrix::identity(2);
        assert!((commutator_bound(&i, &i).unwrap().bound() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn lower_bound_examples() {
        let i = ComplexMatrix::identity(2);
        assert!((lower_bound_sum(&i, &i).unwrap() - 1.0).abs() < 1e-12);
        let s = lower_bound_sum(&real(1, 1, &[2.0]), &real(1, 1, &[4.0])).unwrap();
        assert!((s - 3.0).abs() < 1e-12);
        assert!(lower_bound_sum(&i, &i.scale(-1.0)).unwrap().abs() < 1e-15);
    }

    #[test]
    fn dimension_errors() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(
            product_bound(&a, &b, 0.5),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            single_operator_bound(&real(1, 2, &[1.0, 2.0]), SingleVariant::KittanehSum),
            Err(Error::NonSquare { .. })
        ));
        assert!(matches!(
            product_bound(&a, &a, -0.1),
            Err(Error::ExponentOutOfRange(_))
        ));
    }
}
