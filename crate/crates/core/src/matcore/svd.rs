use super::eig::Rotation;
use super::{inner, vector_norm, ComplexMatrix, C64, ONE, ZERO};
use crate::enclosure::{Enclosure, EnclosureKind};

const MAX_SWEEPS: usize = 80;

/// Thin singular value decomposition `A = U · diag(σ) · V*`.
///
/// For an `m×n` input with `k = min(m, n)`: `u` is `m×k`, `v` is `n×k`,
/// and `singular_values` has length `k`, sorted descending.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    pub u: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub v: ComplexMatrix,
}

impl SvdFactors {
    pub fn max(&self) -> f64 {
        self.singular_values[0]
    }

    /// `U · diag(σ) · V*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let k = self.singular_values.len();
        let us = ComplexMatrix::from_fn(self.u.rows(), k, |i, j| {
            self.u[(i, j)] * self.singular_values[j]
        });
        &us * &self.v.adjoint()
    }
}

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd(a: &ComplexMatrix) -> SvdFactors {
    if a.rows() < a.cols() {
        let t = svd(&a.adjoint());
        return SvdFactors {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        };
    }
    let (m, n) = a.shape();
    let mut g = a.clone();
    let mut v = ComplexMatrix::identity(n);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = ZERO;
                for k in 0..m {
                    let gp = g[(k, p)];
                    let gq = g[(k, q)];
                    alpha += gp.norm_sqr();
                    beta += gq.norm_sqr();
                    gamma += gp.conj() * gq;
                }
                let r = gamma.norm();
                if r < f64::MIN_POSITIVE || r <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let rot = Rotation::annihilating(alpha, beta, gamma);
                rot.apply_right(&mut g, p, q);
                rot.apply_right(&mut v, p, q);
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = (0..n).map(|j| vector_norm(&g.column(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let singular_values: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let v = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);

    let mut u_cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    let mut pending = Vec::new();
    for (c, &j) in order.iter().enumerate() {
        let s = norms[j];
        if s > 0.0 {
            u_cols.push(g.column(j).iter().map(|z| z / s).collect());
        } else {
            u_cols.push(Vec::new());
            pending.push(c);
        }
    }
    for c in pending {
        u_cols[c] = orthonormal_completion(m, &u_cols);
    }
    let mut u = ComplexMatrix::zeros(m, n);
    for (c, col) in u_cols.iter().enumerate() {
        u.set_column(c, col);
    }
    SvdFactors {
        u,
        singular_values,
        v,
    }
}

/// A unit vector orthogonal to every nonempty column in `existing`.
fn orthonormal_completion(m: usize, existing: &[Vec<C64>]) -> Vec<C64> {
    let mut best: Option<(f64, Vec<C64>)> = None;
    for k in 0..m {
        let mut x = vec![ZERO; m];
        x[k] = ONE;
        for _ in 0..2 {
            for col in existing.iter().filter(|c| !c.is_empty()) {
                let proj = inner(&x, col);
                for (xi, ci) in x.iter_mut().zip(col) {
                    *xi -= proj * ci;
                }
            }
        }
        let nrm = vector_norm(&x);
        if best.as_ref().is_none_or(|(b, _)| nrm > *b) {
            best = Some((nrm, x));
        }
        if nrm > 0.5 {
            break;
        }
    }
    let (nrm, x) = best.expect("m > 0");
    x.into_iter().map(|z| z / nrm).collect()
}

/// `‖A‖ = σ_max(A)` with rounding padding.
pub fn operator_norm(a: &ComplexMatrix) -> Enclosure {
    let s = svd(a).max();
    let dim = a.rows().max(a.cols()) as f64;
    let pad = 8.0 * dim * f64::EPSILON * s;
    Enclosure::new((s - pad).max(0.0), s + pad, EnclosureKind::Exact)
}
