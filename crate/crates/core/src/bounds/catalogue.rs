use std::collections::BTreeMap;

use super::block::BlockOperatorMatrix;
use super::id::{BoundId, BoundResult, EntryArgmin};
use super::psd_norm;
use crate::error::{Error, Result};
use crate::matcore::{operator_norm, ComplexMatrix};
use crate::radius::{default_tolerance, numerical_radius, w_nonneg};
use crate::scalar::{minimize_on_unit_interval, T_GRID_POINTS};
use crate::specfun::PolarFactors;

/// Per-block factorizations and diagonal numerical radii, shared by every
/// bound evaluated on the same block matrix.
#[derive(Debug, Clone)]
pub struct BlockBounds<'a> {
    matrix: &'a BlockOperatorMatrix,
    polar: Vec<PolarFactors>,
    diag_w: Vec<f64>,
}

impl<'a> BlockBounds<'a> {
    pub fn new(matrix: &'a BlockOperatorMatrix) -> Result<Self> {
        let polar = matrix
            .blocks()
            .iter()
            .map(PolarFactors::new)
            .collect::<Result<Vec<_>>>()?;
        let diag_w = (0..matrix.n())
            .map(|i| {
                let b = matrix.block(i, i);
                // rounded up: the auxiliary matrix must dominate
                numerical_radius(b, default_tolerance(b)).map(|e| e.hi)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BlockBounds {
            matrix,
            polar,
            diag_w,
        })
    }

    pub fn matrix(&self) -> &BlockOperatorMatrix {
        self.matrix
    }

    /// Certified upper ends of `w(A_ii)`.
    pub fn diagonal_radii(&self) -> &[f64] {
        &self.diag_w
    }

    fn p(&self, i: usize, j: usize) -> &PolarFactors {
        &self.polar[i * self.matrix.n() + j]
    }

    /// Upper-triangular entry of the equal-exponent family at `t`.
    pub fn rem2_i_entry(&self, i: usize, j: usize, t: f64) -> f64 {
        let (x, y) = (self.p(i, j), self.p(j, i));
        let first = &x.abs_power(2.0 * t) + &y.abs_adjoint_power(2.0 * t);
        let second = &x.abs_adjoint_power(2.0 * (1.0 - t)) + &y.abs_power(2.0 * (1.0 - t));
        psd_norm(&first).sqrt() * psd_norm(&second).sqrt()
    }

    /// Upper-triangular entry of the mixed-exponent family at `t`.
    pub fn rem2_ii_entry(&self, i: usize, j: usize, t: f64) -> f64 {
        let (x, y) = (self.p(i, j), self.p(j, i));
        let first = &x.abs_power(2.0 * t) + &y.abs_adjoint_power(2.0 * (1.0 - t));
        let second = &x.abs_adjoint_power(2.0 * (1.0 - t)) + &y.abs_power(2.0 * t);
        psd_norm(&first).sqrt() * psd_norm(&second).sqrt()
    }

    fn sqrt_sum_entry(&self, i: usize, j: usize) -> f64 {
        let (x, y) = (self.p(i, j), self.p(j, i));
        let first = &x.abs() + &y.abs_adjoint();
        let second = &y.abs() + &x.abs_adjoint();
        psd_norm(&first).sqrt() * psd_norm(&second).sqrt()
    }

    fn cor1_1_entry(&self, i: usize, j: usize, t: f64) -> f64 {
        let x = self.p(i, j);
        psd_norm(&weighted(x, t)).sqrt() * psd_norm(&weighted_adjoint(x, 1.0 - t)).sqrt()
    }

    fn cor2_entry(&self, i: usize, j: usize, t: f64) -> f64 {
        let (x, y) = (self.p(i, j), self.p(j, i));
        let first = &weighted(x, t) + &weighted_adjoint(y, t);
        let second = &weighted_adjoint(x, 1.0 - t) + &weighted(y, 1.0 - t);
        psd_norm(&first).sqrt() * psd_norm(&second).sqrt()
    }

    fn cor3_entry(&self, i: usize, j: usize, t: f64) -> f64 {
        let (x, y) = (self.p(i, j), self.p(j, i));
        let first = &weighted(x, t) + &weighted_adjoint(y, 1.0 - t);
        let second = &weighted_adjoint(x, 1.0 - t) + &weighted(y, t);
        psd_norm(&first).sqrt() * psd_norm(&second).sqrt()
    }

    fn prop4_entry(&self, i: usize, j: usize) -> f64 {
        let (x, y) = (self.p(i, j), self.p(j, i));
        let first = (&x.abs_power(2.0) + &y.abs_adjoint_power(2.0)).scale(0.5);
        let second = (&x.abs_adjoint_power(2.0) + &y.abs_power(2.0)).scale(0.5);
        let (a, b) = (psd_norm(&first).sqrt(), psd_norm(&second).sqrt());
        // first operand wins ties
        if b < a {
            b
        } else {
            a
        }
    }

    /// The nonnegative auxiliary matrix of `id`, plus per-entry minimizers
    /// for the min-over-t families.
    pub fn aux(&self, id: BoundId) -> Result<(ComplexMatrix, Option<Vec<EntryArgmin>>)> {
        if let Some(t) = id.t() {
            if !(0.0..=1.0).contains(&t) {
                return Err(Error::ExponentOutOfRange(t));
            }
        }
        let n = self.matrix.n();
        let mut aux = vec![0.0; n * n];
        let mut argmins = None;
        for i in 0..n {
            aux[i * n + i] = match id {
                BoundId::HouDu => operator_norm(self.matrix.block(i, i)).hi,
                _ => self.diag_w[i],
            };
        }
        let upper = |f: &dyn Fn(usize, usize) -> f64, aux: &mut Vec<f64>| {
            for i in 0..n {
                for j in (i + 1)..n {
                    aux[i * n + j] = f(i, j);
                }
            }
        };
        let off_diagonal = |f: &dyn Fn(usize, usize) -> f64, aux: &mut Vec<f64>| {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        aux[i * n + j] = f(i, j);
                    }
                }
            }
        };
        match id {
            BoundId::HouDu | BoundId::Aok => {
                off_diagonal(&|i, j| operator_norm(self.matrix.block(i, j)).hi, &mut aux)
            }
            BoundId::SqrtSum => upper(&|i, j| self.sqrt_sum_entry(i, j), &mut aux),
            BoundId::Rem2I(t) => upper(&|i, j| self.rem2_i_entry(i, j, t), &mut aux),
            BoundId::Rem2Ii(t) => upper(&|i, j| self.rem2_ii_entry(i, j, t), &mut aux),
            BoundId::Cor11(t) => off_diagonal(&|i, j| self.cor1_1_entry(i, j, t), &mut aux),
            BoundId::Cor2(t) => upper(&|i, j| self.cor2_entry(i, j, t), &mut aux),
            BoundId::Cor3(t) => upper(&|i, j| self.cor3_entry(i, j, t), &mut aux),
            BoundId::Prop4 => off_diagonal(&|i, j| self.prop4_entry(i, j), &mut aux),
            BoundId::Rem12I | BoundId::Rem12Ii => {
                let mut found = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        let m = if id == BoundId::Rem12I {
                            minimize_on_unit_interval(|t| self.rem2_i_entry(i, j, t))
                        } else {
                            minimize_on_unit_interval(|t| self.rem2_ii_entry(i, j, t))
                        };
                        aux[i * n + j] = m.value;
                        found.push(EntryArgmin {
                            i,
                            j,
                            t: m.t,
                            value: m.value,
                        });
                    }
                }
                argmins = Some(found);
            }
            other => return Err(Error::NotApplicable(other.to_string())),
        }
        Ok((ComplexMatrix::from_real(n, n, &aux)?, argmins))
    }

    pub fn evaluate(&self, id: BoundId) -> Result<BoundResult> {
        let (aux, argmins) = self.aux(id)?;
        let value = w_nonneg(&aux)?;
        let mut params = BTreeMap::new();
        if let Some(t) = id.t() {
            params.insert("t".to_string(), t);
        }
        if let Some(found) = &argmins {
            params.insert("grid_points".to_string(), T_GRID_POINTS as f64);
            for e in found {
                params.insert(format!("t_{}_{}", e.i + 1, e.j + 1), e.t);
            }
        }
        Ok(BoundResult {
            id,
            params,
            aux,
            value,
            argmins,
        })
    }
}

/// `|A|^s |K| |A|^s` with `K` the polar isometry.
fn weighted(p: &PolarFactors, s: f64) -> ComplexMatrix {
    let f = p.abs_power(s);
    (&(&f * &p.support_projection()) * &f).hermitian_part()
}

/// `|A*|^s |K*| |A*|^s`.
fn weighted_adjoint(p: &PolarFactors, s: f64) -> ComplexMatrix {
    let g = p.abs_adjoint_power(s);
    (&(&g * &p.range_projection()) * &g).hermitian_part()
}

/// Auxiliary matrix of a block-matrix bound.
pub fn aux_matrix(a: &BlockOperatorMatrix, id: BoundId) -> Result<ComplexMatrix> {
    Ok(BlockBounds::new(a)?.aux(id)?.0)
}

/// `w(Ã)` for a block-matrix bound.
pub fn evaluate_bound(a: &BlockOperatorMatrix, id: BoundId) -> Result<BoundResult> {
    BlockBounds::new(a)?.evaluate(id)
}

/// Per-entry min-over-t refinement; `family` must be `Rem12I` or `Rem12Ii`.
pub fn minimize_over_t(a: &BlockOperatorMatrix, family: BoundId) -> Result<BoundResult> {
    match family {
        BoundId::Rem12I | BoundId::Rem12Ii => evaluate_bound(a, family),
        other => Err(Error::NotApplicable(other.to_string())),
    }
}
