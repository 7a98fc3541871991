//! Spectral functions of positive semidefinite matrices and contraction
//! factorizations.
//!
//! For a square `A` with SVD `A = W Σ V*`, the moduli are `|A| = V Σ V*` and
//! `|A*| = W Σ W*`, and the polar partial isometry is `U = W 1_{σ>0} V*`.
//! `U` intertwines the two moduli (`g(|A*|) U = U g(|A|)` for any `g`), so
//! for every pair with `f(λ)g(λ) = λ` we get `A = g(|A*|) · U · f(|A|)`.
//! That `U` is the contraction used by every bound in [`crate::bounds`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matcore::{hermitian_eig, inner, svd, ComplexMatrix, C64};

/// Singular values at or below `RANK_CUTOFF · σ_max` are treated as zero.
pub const RANK_CUTOFF: f64 = 1e-12;

/// Relative threshold below which a nominally PSD eigenvalue is rejected.
pub const PSD_CLAMP: f64 = 1e-10;

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Nonnegative functions `f, g` on `[0, ∞)` with `f(λ)·g(λ) = λ`.
#[derive(Clone)]
pub struct FunctionPair {
    f: ScalarFn,
    g: ScalarFn,
    label: String,
}

impl FunctionPair {
    /// An arbitrary pair. The product identity is checked lazily by
    /// [`FunctionPair::validate`].
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        g: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        FunctionPair {
            f: Arc::new(f),
            g: Arc::new(g),
            label: label.into(),
        }
    }

    /// `f(λ) = λ^t`, `g(λ) = λ^{1−t}` with the convention `0⁰ = 1`.
    pub fn power(t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::ExponentOutOfRange(t));
        }
        Ok(FunctionPair::new(
            format!("power:t={t}"),
            move |l| power(l, t),
            move |l| power(l, 1.0 - t),
        ))
    }

    pub fn f(&self, lambda: f64) -> f64 {
        (self.f)(lambda)
    }

    pub fn g(&self, lambda: f64) -> f64 {
        (self.g)(lambda)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Checks nonnegativity and `|f(λ)g(λ) − λ| ≤ 1e-10·(1 + λ)` at each sample.
    pub fn validate(&self, samples: &[f64]) -> Result<()> {
        for &lambda in samples {
            let (fl, gl) = (self.f(lambda), self.g(lambda));
            let reason = if !(fl.is_finite() && gl.is_finite()) {
                Some("non-finite value")
            } else if fl < 0.0 || gl < 0.0 {
                Some("negative value")
            } else if (fl * gl - lambda).abs() > 1e-10 * (1.0 + lambda) {
                Some("f(λ)·g(λ) differs from λ")
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Error::InvalidFunctionPair {
                    label: self.label.clone(),
                    lambda,
                    reason,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FunctionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionPair")
            .field("label", &self.label)
            .finish()
    }
}

/// `λ^s` on `[0, ∞)` with `0⁰ = 1`.
pub fn power(lambda: f64, s: f64) -> f64 {
    if s == 0.0 {
        1.0
    } else {
        lambda.max(0.0).powf(s)
    }
}

/// `f(P)` for a Hermitian PSD `P`, clamping eigenvalues in `[−1e-10·λ_max, 0)` to zero.
pub fn psd_apply(p: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(p)?;
    let scale = eig.max().abs().max(eig.min().abs());
    let threshold = -PSD_CLAMP * scale;
    if eig.min() < threshold {
        return Err(Error::NotPsd {
            eigenvalue: eig.min(),
            threshold,
        });
    }
    Ok(eig.apply_fn(|l| f(l.max(0.0))))
}

/// `P^s` for Hermitian PSD `P` and `s ∈ [0, 1]`; `P⁰ = I` exactly.
pub fn psd_power(p: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::ExponentOutOfRange(s));
    }
    let n = p.ensure_square()?;
    let out = psd_apply(p, |l| power(l, s))?;
    if s == 0.0 {
        return Ok(ComplexMatrix::identity(n));
    }
    Ok(out)
}

/// SVD-based moduli and polar factor of a square matrix.
#[derive(Debug, Clone)]
pub struct PolarFactors {
    left: ComplexMatrix,
    sigma: Vec<f64>,
    right: ComplexMatrix,
}

impl PolarFactors {
    pub fn new(a: &ComplexMatrix) -> Result<Self> {
        a.ensure_square()?;
        let s = svd(a);
        let cut = RANK_CUTOFF * s.max();
        let sigma = s
            .singular_values
            .iter()
            .map(|&x| if x <= cut { 0.0 } else { x })
            .collect();
        Ok(PolarFactors {
            left: s.u,
            sigma,
            right: s.v,
        })
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    /// Singular values after the rank cutoff, descending.
    pub fn singular_values(&self) -> &[f64] {
        &self.sigma
    }

    pub fn norm(&self) -> f64 {
        self.sigma[0]
    }

    /// `h(|A|) = V h(Σ) V*`.
    pub fn abs_fn(&self, h: impl Fn(f64) -> f64) -> ComplexMatrix {
        let values: Vec<f64> = self.sigma.iter().map(|&s| h(s)).collect();
        ComplexMatrix::congruence_diag(&self.right, &values)
    }

    /// `h(|A*|) = W h(Σ) W*`.
    pub fn abs_adjoint_fn(&self, h: impl Fn(f64) -> f64) -> ComplexMatrix {
        let values: Vec<f64> = self.sigma.iter().map(|&s| h(s)).collect();
        ComplexMatrix::congruence_diag(&self.left, &values)
    }

    pub fn abs(&self) -> ComplexMatrix {
        self.abs_fn(|s| s)
    }

    pub fn abs_adjoint(&self) -> ComplexMatrix {
        self.abs_adjoint_fn(|s| s)
    }

    /// `|A|^s`, with `|A|⁰ = I`.
    pub fn abs_power(&self, s: f64) -> ComplexMatrix {
        if s == 0.0 {
            return ComplexMatrix::identity(self.dim());
        }
        self.abs_fn(|x| power(x, s))
    }

    /// `|A*|^s`, with `|A*|⁰ = I`.
    pub fn abs_adjoint_power(&self, s: f64) -> ComplexMatrix {
        if s == 0.0 {
            return ComplexMatrix::identity(self.dim());
        }
        self.abs_adjoint_fn(|x| power(x, s))
    }

    /// Support projection of `|A|`, equal to `|U|` for the polar isometry `U`.
    pub fn support_projection(&self) -> ComplexMatrix {
        self.abs_fn(indicator)
    }

    /// Support projection of `|A*|`, equal to `|U*|`.
    pub fn range_projection(&self) -> ComplexMatrix {
        self.abs_adjoint_fn(indicator)
    }

    /// `U = W 1_{σ>0} V*`.
    pub fn isometry(&self) -> ComplexMatrix {
        let n = self.dim();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &s) in self.sigma.iter().enumerate() {
            if s == 0.0 {
                continue;
            }
            for i in 0..n {
                let wik = self.left[(i, k)];
                for j in 0..n {
                    out[(i, j)] += wik * self.right[(j, k)].conj();
                }
            }
        }
        out
    }
}

fn indicator(s: f64) -> f64 {
    if s > 0.0 {
        1.0
    } else {
        0.0
    }
}

/// `(|A|, |A*|)` for square `A`.
pub fn abs_factors(a: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let p = PolarFactors::new(a)?;
    Ok((p.abs(), p.abs_adjoint()))
}

/// The partial isometry `U` of the polar decomposition `A = U|A|`, vanishing on `ker A`.
pub fn polar_isometry(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(PolarFactors::new(a)?.isometry())
}

/// `A = g(|A*|) · K · f(|A|)` with `K` the polar partial isometry.
#[derive(Debug, Clone)]
pub struct ContractionFactorization {
    pub k: ComplexMatrix,
    pub abs_a: ComplexMatrix,
    pub abs_a_star: ComplexMatrix,
    pub pair: FunctionPair,
    polar: PolarFactors,
}

impl ContractionFactorization {
    /// `f(|A|)`.
    pub fn f_abs(&self) -> ComplexMatrix {
        self.polar.abs_fn(|x| self.pair.f(x))
    }

    /// `g(|A*|)`.
    pub fn g_abs_star(&self) -> ComplexMatrix {
        self.polar.abs_adjoint_fn(|x| self.pair.g(x))
    }

    /// `|K|`.
    pub fn k_modulus(&self) -> ComplexMatrix {
        self.polar.support_projection()
    }

    /// `|K*|`.
    pub fn k_adjoint_modulus(&self) -> ComplexMatrix {
        self.polar.range_projection()
    }

    /// `g(|A*|) · K · f(|A|)`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        &(&self.g_abs_star() * &self.k) * &self.f_abs()
    }

    /// `f(|A|) |K| f(|A|)`.
    pub fn right_weight(&self) -> ComplexMatrix {
        let f = self.f_abs();
        (&(&f * &self.k_modulus()) * &f).hermitian_part()
    }

    /// `g(|A*|) |K*| g(|A*|)`.
    pub fn left_weight(&self) -> ComplexMatrix {
        let g = self.g_abs_star();
        (&(&g * &self.k_adjoint_modulus()) * &g).hermitian_part()
    }
}

/// Builds the factorization `A = g(|A*|) K f(|A|)` for a validated pair.
///
/// The pair is checked at the singular values of `A` and at 33 equispaced
/// points of `[0, ‖A‖]`.
pub fn contraction_factorization(
    a: &ComplexMatrix,
    pair: &FunctionPair,
) -> Result<ContractionFactorization> {
    let polar = PolarFactors::new(a)?;
    let top = polar.norm();
    let mut samples: Vec<f64> = polar.singular_values().to_vec();
    samples.extend((0..=32).map(|k| top * k as f64 / 32.0));
    pair.validate(&samples)?;
    Ok(ContractionFactorization {
        k: polar.isometry(),
        abs_a: polar.abs(),
        abs_a_star: polar.abs_adjoint(),
        pair: pair.clone(),
        polar,
    })
}

/// `⟨F x, x⟩·⟨G y, y⟩ − |⟨A x, y⟩|²` where `F = f(|A|)|K|f(|A|)` and
/// `G = g(|A*|)|K*|g(|A*|)`; nonnegative up to rounding.
pub fn lemma_slack(a: &ComplexMatrix, pair: &FunctionPair, x: &[C64], y: &[C64]) -> Result<f64> {
    let cf = contraction_factorization(a, pair)?;
    let ax = a.apply(x)?;
    if y.len() != ax.len() {
        return Err(Error::DimensionMismatch {
            op: "lemma_inequality_check",
            left: a.shape(),
            right: (y.len(), 1),
        });
    }
    let lhs = inner(&ax, y).norm_sqr();
    let fx = inner(&cf.right_weight().apply(x)?, x).re;
    let gy = inner(&cf.left_weight().apply(y)?, y).re;
    Ok(fx * gy - lhs)
}

/// Whether `|⟨Ax, y⟩|² ≤ ⟨f(|A|)|K|f(|A|)x, x⟩·⟨g(|A*|)|K*|g(|A*|)y, y⟩ + 1e-10`.
pub fn lemma_inequality_check(
    a: &ComplexMatrix,
    pair: &FunctionPair,
    x: &[C64],
    y: &[C64],
) -> Result<bool> {
    Ok(lemma_slack(a, pair, x, y)? >= -1e-10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::operator_norm;

    fn real(rows: &[&[f64]]) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(rows).unwrap()
    }

    fn e(n: usize, k: usize) -> Vec<C64> {
        (0..n)
            .map(|i| C64::new(if i == k { 1.0 } else { 0.0 }, 0.0))
            .collect()
    }

    #[test]
    fn psd_power_examples() {
        let r = psd_power(&ComplexMatrix::from_diag(&[4.0, 9.0]), 0.5).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_diag(&[2.0, 3.0])) < 1e-15);
        let r = psd_power(&ComplexMatrix::from_diag(&[0.0, 2.0, 3.0]), 0.0).unwrap();
        assert_eq!(r, ComplexMatrix::identity(3));
    }

    #[test]
    fn psd_power_rejects_indefinite_and_bad_exponent() {
        let p = ComplexMatrix::from_diag(&[1.0, -0.5]);
        assert!(matches!(psd_power(&p, 0.5), Err(Error::NotPsd { .. })));
        assert!(matches!(
            psd_power(&ComplexMatrix::identity(2), 1.5),
            Err(Error::ExponentOutOfRange(_))
        ));
        assert!(matches!(
            psd_power(&ComplexMatrix::zeros(2, 3), 0.5),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn psd_power_clamps_rounding_negatives() {
        let p = ComplexMatrix::from_diag(&[1.0, -1e-14]);
        let r = psd_power(&p, 0.5).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_diag(&[1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn abs_factors_examples() {
        let (a, b) = abs_factors(&real(&[&[0.0, 2.0], &[0.0, 0.0]])).unwrap();
        assert!(a.max_abs_diff(&ComplexMatrix::from_diag(&[0.0, 2.0])) < 1e-15);
        assert!(b.max_abs_diff(&ComplexMatrix::from_diag(&[2.0, 0.0])) < 1e-15);

        let (a, b) = abs_factors(&ComplexMatrix::identity(2)).unwrap();
        assert!(a.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
        assert!(b.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);

        let shift = real(&[&[0.0, 2.0, 0.0], &[0.0, 0.0, 3.0], &[0.0, 0.0, 0.0]]);
        let (a, b) = abs_factors(&shift).unwrap();
        assert!(a.max_abs_diff(&ComplexMatrix::from_diag(&[0.0, 2.0, 3.0])) < 1e-15);
        assert!(b.max_abs_diff(&ComplexMatrix::from_diag(&[2.0, 3.0, 0.0])) < 1e-15);
    }

    #[test]
    fn polar_isometry_examples() {
        let u = polar_isometry(&real(&[&[0.0, 2.0], &[0.0, 0.0]])).unwrap();
        assert!(u.max_abs_diff(&real(&[&[0.0, 1.0], &[0.0, 0.0]])) < 1e-15);
        let u = polar_isometry(&ComplexMatrix::identity(2)).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
        assert_eq!(
            polar_isometry(&ComplexMatrix::zeros(2, 2)).unwrap(),
            ComplexMatrix::zeros(2, 2)
        );
    }

    #[test]
    fn factorization_examples() {
        let a = real(&[&[0.0, 2.0], &[0.0, 0.0]]);
        let cf = contraction_factorization(&a, &FunctionPair::power(0.5).unwrap()).unwrap();
        assert!(cf.k.max_abs_diff(&real(&[&[0.0, 1.0], &[0.0, 0.0]])) < 1e-15);
        assert!(cf.reconstruct().max_abs_diff(&a) < 1e-14);

        let pair = FunctionPair::new(
            "sqrt-scaled",
            |l: f64| 2.0 * l.sqrt(),
            |l: f64| 0.5 * l.sqrt(),
        );
        let cf = contraction_factorization(&ComplexMatrix::identity(2), &pair).unwrap();
        assert!(cf.k.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);

        let zero = ComplexMatrix::zeros(2, 2);
        let cf = contraction_factorization(&zero, &FunctionPair::power(0.3).unwrap()).unwrap();
        assert_eq!(cf.k, zero);
        assert!(cf.reconstruct().max_abs() < 1e-300);
    }

    #[test]
    fn invalid_pair_is_rejected() {
        let bad = FunctionPair::new("double", |l: f64| l, |_| 2.0);
        let err = contraction_factorization(&ComplexMatrix::identity(2), &bad).unwrap_err();
        assert!(matches!(err, Error::InvalidFunctionPair { .. }));
        let neg = FunctionPair::new("neg", |l: f64| -l, |_| -1.0);
        assert!(neg.validate(&[1.0]).is_err());
        assert!(FunctionPair::power(-0.1).is_err());
    }

    #[test]
    fn lemma_examples() {
        let half = FunctionPair::power(0.5).unwrap();
        let i2 = ComplexMatrix::identity(2);
        assert!(lemma_inequality_check(&i2, &half, &e(2, 0), &e(2, 0)).unwrap());
        let n = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let slack = lemma_slack(&n, &half, &e(2, 1), &e(2, 0)).unwrap();
        assert!(
            slack.abs() < 1e-15,
            "1 ≤ 1·1 holds with equality, slack {slack}"
        );
        assert!(matches!(
            lemma_inequality_check(&n, &half, &e(2, 1), &e(3, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_moduli_of_nilpotent() {
        let n = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let cf = contraction_factorization(&n, &FunctionPair::power(0.5).unwrap()).unwrap();
        assert!(
            cf.k_modulus()
                .max_abs_diff(&ComplexMatrix::from_diag(&[0.0, 1.0]))
                < 1e-15
        );
        assert!(
            cf.k_adjoint_modulus()
                .max_abs_diff(&ComplexMatrix::from_diag(&[1.0, 0.0]))
                < 1e-15
        );
        assert!(operator_norm(&cf.k).hi <= 1.0 + 1e-10);
    }
}
