use super::{ComplexMatrix, C64, ZERO};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 80;

/// Spectral decomposition `H = V · diag(λ) · V*` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, in eigenvalue order.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Eigenvector for the largest eigenvalue.
    pub fn top_vector(&self) -> Vec<C64> {
        self.eigenvectors.column(self.eigenvalues.len() - 1)
    }

    /// `V · diag(f(λ)) · V*`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let values: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::congruence_diag(&self.eigenvectors, &values)
    }
}

/// Unitary 2×2 block `[[c, s], [-s·conj(φ), c·conj(φ)]]` acting on columns `p, q`
/// that annihilates the `(p, q)` entry of a Hermitian pivot `[[app, apq], [conj apq, aqq]]`.
#[derive(Debug, Clone, Copy)]
pub(super) struct Rotation {
    pp: C64,
    pq: C64,
    qp: C64,
    qq: C64,
}

impl Rotation {
    pub(super) fn annihilating(app: f64, aqq: f64, apq: C64) -> Self {
        let r = apq.norm();
        let phase = apq / r;
        let theta = (aqq - app) / (2.0 * r);
        let t = if theta.abs() > 1e150 {
            0.5 / theta
        } else {
            let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
            sign / (theta.abs() + (theta * theta + 1.0).sqrt())
        };
        let c = 1.0 / (1.0 + t * t).sqrt();
        let s = t * c;
        let conj_phase = phase.conj();
        Rotation {
            pp: C64::new(c, 0.0),
            pq: C64::new(s, 0.0),
            qp: -conj_phase * s,
            qq: conj_phase * c,
        }
    }

    /// `M ← M · J` on columns `p, q`.
    pub(super) fn apply_right(&self, m: &mut ComplexMatrix, p: usize, q: usize) {
        for k in 0..m.rows() {
            let mp = m[(k, p)];
            let mq = m[(k, q)];
            m[(k, p)] = mp * self.pp + mq * self.qp;
            m[(k, q)] = mp * self.pq + mq * self.qq;
        }
    }

    /// `M ← J* · M` on rows `p, q`.
    fn apply_left_adjoint(&self, m: &mut ComplexMatrix, p: usize, q: usize) {
        for k in 0..m.cols() {
            let mp = m[(p, k)];
            let mq = m[(q, k)];
            m[(p, k)] = self.pp.conj() * mp + self.qp.conj() * mq;
            m[(q, k)] = self.pq.conj() * mp + self.qq.conj() * mq;
        }
    }
}

/// Eigen-decomposition of a (numerically) Hermitian matrix by cyclic Jacobi rotations.
///
/// The input is symmetrized as `(H + H*)/2` when `‖H − H*‖_F ≤ 1e-10·(1 + ‖H‖_F)`;
/// larger asymmetry is rejected.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEig> {
    let (a, v) = jacobi(h, true)?;
    let v = v.expect("vectors requested");
    let n = a.rows();
    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep solver order
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEig {
        eigenvalues,
        eigenvectors,
    })
}

/// Ascending eigenvalues only; same preconditions and rotations as [`hermitian_eig`].
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let (a, _) = jacobi(h, false)?;
    let mut values: Vec<f64> = (0..a.rows()).map(|i| a[(i, i)].re).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

fn jacobi(h: &ComplexMatrix, want_vectors: bool) -> Result<(ComplexMatrix, Option<ComplexMatrix>)> {
    let n = h.ensure_square()?;
    let frob = h.frobenius_norm();
    let tolerance = 1e-10 * (1.0 + frob);
    let asymmetry = h.hermitian_defect();
    if asymmetry > tolerance {
        return Err(Error::NotHermitian {
            asymmetry,
            tolerance,
        });
    }

    let mut a = h.hermitian_part();
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let floor = 1e-3 * f64::EPSILON * frob;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                if r <= floor
                    || r < f64::MIN_POSITIVE
                    || r <= 0.5 * f64::EPSILON * (app.abs() * aqq.abs()).sqrt()
                {
                    if r != 0.0 {
                        a[(p, q)] = ZERO;
                        a[(q, p)] = ZERO;
                    }
                    continue;
                }
                rotated = true;
                let rot = Rotation::annihilating(app, aqq, apq);
                rot.apply_right(&mut a, p, q);
                rot.apply_left_adjoint(&mut a, p, q);
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
                if let Some(v) = v.as_mut() {
                    rot.apply_right(v, p, q);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    Ok((a, v))
}
