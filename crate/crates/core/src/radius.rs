//! Certified numerical radius.
//!
//! `w(A) = max_θ λ_max(H(θ))` with `H(θ) = (e^{iθ}A + e^{−iθ}A*)/2`. The
//! function `h(θ) = λ_max(H(θ))` is the support function of the numerical
//! range, so on a cell `[a, b]` it is bounded above by
//!
//! * the Lipschitz bound `(h(a) + h(b))/2 + ‖A‖(b − a)/2`, and
//! * the support of the wedge cut out by the two supporting half-planes
//!   at `a` and `b`, which the numerical range lies inside.
//!
//! The sweep starts from a uniform grid and bisects the cell with the largest
//! certified upper bound until the enclosure is narrower than the tolerance.
//! Golden-section refinement only improves the lower end; the upper end
//! always comes from the cell certificates.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::enclosure::{Enclosure, EnclosureKind};
use crate::error::{Error, Result};
use crate::matcore::{hermitian_eigenvalues, operator_norm, ComplexMatrix, C64};
use crate::scalar::golden_section_min;

const INITIAL_GRID: usize = 64;
const MAX_EVALUATIONS: usize = 2_000_000;

/// `1e-8 · (1 + ‖A‖)`.
pub fn default_tolerance(a: &ComplexMatrix) -> f64 {
    1e-8 * (1.0 + operator_norm(a).hi)
}

/// `λ_max` of `H(θ)` as a function of `θ`, with the two Hermitian parts cached.
#[derive(Debug, Clone)]
pub struct SupportFunction {
    re_part: ComplexMatrix,
    im_part: ComplexMatrix,
}

impl SupportFunction {
    pub fn new(a: &ComplexMatrix) -> Result<Self> {
        let n = a.ensure_square()?;
        let adj = a.adjoint();
        let re_part = ComplexMatrix::from_fn(n, n, |i, j| (a[(i, j)] + adj[(i, j)]) * 0.5);
        let im_part =
            ComplexMatrix::from_fn(n, n, |i, j| (a[(i, j)] - adj[(i, j)]) * C64::new(0.0, -0.5));
        Ok(SupportFunction { re_part, im_part })
    }

    /// `H(θ) = cos θ · Re A − sin θ · Im A`.
    pub fn hermitian_at(&self, theta: f64) -> ComplexMatrix {
        let (s, c) = theta.sin_cos();
        let n = self.re_part.rows();
        ComplexMatrix::from_fn(n, n, |i, j| {
            self.re_part[(i, j)] * c - self.im_part[(i, j)] * s
        })
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let values = hermitian_eigenvalues(&self.hermitian_at(theta)).expect("H(θ) is Hermitian");
        *values.last().expect("nonempty")
    }
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    a: f64,
    b: f64,
    ha: f64,
    hb: f64,
    upper: f64,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.upper
            .total_cmp(&other.upper)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Certified upper bound for `max h` on `[a, b]`, `b − a < π`, with values
/// already padded by the eigensolver error.
fn cell_upper(a: f64, b: f64, ha: f64, hb: f64, lipschitz: f64) -> f64 {
    let lip = 0.5 * (ha + hb) + 0.5 * lipschitz * (b - a);
    let half = 0.5 * (b - a);
    let (sd, cd) = half.sin_cos();
    if sd <= 0.0 {
        return lip;
    }
    // apex of the wedge in the frame aligned with the mid-angle
    let x = 0.5 * (ha + hb) / cd;
    let y = 0.5 * (hb - ha) / sd;
    let wedge = if x > 0.0 && y.abs() * cd <= x * sd {
        x.hypot(y)
    } else {
        ha.max(hb)
    };
    lip.min(wedge)
}

/// Enclosure of `w(A)` with width at most `tol`.
pub fn numerical_radius(a: &ComplexMatrix, tol: f64) -> Result<Enclosure> {
    let n = a.ensure_square()?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::ToleranceNotPositive(tol));
    }
    if n == 1 {
        let w = a[(0, 0)].norm();
        return Ok(Enclosure::around(
            w,
            2.0 * f64::EPSILON * w,
            EnclosureKind::Exact,
        ));
    }
    let norm = operator_norm(a).hi;
    if norm == 0.0 {
        return Ok(Enclosure::point(0.0, EnclosureKind::Exact));
    }

    let support = SupportFunction::new(a)?;
    let pad = 32.0 * n as f64 * f64::EPSILON * norm;
    let step = 2.0 * PI / INITIAL_GRID as f64;
    let grid: Vec<f64> = (0..=INITIAL_GRID).map(|k| k as f64 * step).collect();
    let mut values: Vec<f64> = grid[..INITIAL_GRID]
        .iter()
        .map(|&t| support.eval(t))
        .collect();
    values.push(values[0]);
    let mut evaluations = INITIAL_GRID;

    let mut best = values[..INITIAL_GRID]
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    let k = values[..INITIAL_GRID]
        .iter()
        .position(|&v| v == best)
        .expect("grid max");
    let polished = golden_section_min(|t| -support.eval(t), grid[k] - step, grid[k] + step, 1e-9);
    best = best.max(-polished.value);

    let mut heap: BinaryHeap<Cell> = (0..INITIAL_GRID)
        .map(|k| {
            let (ha, hb) = (values[k] + pad, values[k + 1] + pad);
            Cell {
                a: grid[k],
                b: grid[k + 1],
                ha,
                hb,
                upper: cell_upper(grid[k], grid[k + 1], ha, hb, norm),
            }
        })
        .collect();

    loop {
        let top = *heap.peek().expect("cells");
        let lo = (best - pad).max(0.0);
        if top.upper - lo <= tol || evaluations >= MAX_EVALUATIONS || top.b - top.a < 1e-14 {
            let hi = top.upper.max(lo);
            return Ok(Enclosure::new(lo, hi.min(norm + pad), EnclosureKind::Swept));
        }
        heap.pop();
        let mid = 0.5 * (top.a + top.b);
        let hm_raw = support.eval(mid);
        evaluations += 1;
        best = best.max(hm_raw);
        let hm = hm_raw + pad;
        for (a, b, ha, hb) in [(top.a, mid, top.ha, hm), (mid, top.b, hm, top.hb)] {
            let upper = cell_upper(a, b, ha, hb, norm);
            heap.push(Cell {
                a,
                b,
                ha,
                hb,
                upper,
            });
        }
    }
}

/// `w(A) = λ_max(A + Aᵀ)/2` for a real matrix with nonnegative entries.
pub fn w_nonneg(a: &ComplexMatrix) -> Result<Enclosure> {
    let n = a.ensure_square()?;
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            if z.im != 0.0 {
                return Err(Error::NonReal {
                    row: i,
                    col: j,
                    imag: z.im,
                });
            }
            if z.re < 0.0 {
                return Err(Error::NegativeEntry {
                    row: i,
                    col: j,
                    value: z.re,
                });
            }
        }
    }
    let sym = ComplexMatrix::from_fn(n, n, |i, j| a[(i, j)] + a[(j, i)]);
    let top = *hermitian_eigenvalues(&sym)?.last().expect("nonempty");
    let w = 0.5 * top.max(0.0);
    let pad = 4.0 * n as f64 * f64::EPSILON * 0.5 * sym.frobenius_norm();
    Ok(Enclosure::new(
        (w - pad).max(0.0),
        w + pad,
        EnclosureKind::FastPath,
    ))
}

/// Whether the fast path and the sweep (at `1e-8`) agree on a nonnegative matrix.
pub fn crosscheck(a: &ComplexMatrix) -> Result<bool> {
    let fast = w_nonneg(a)?;
    let swept = numerical_radius(a, 1e-8)?;
    Ok(fast.overlaps(&swept))
}

/// `w(A)` via the fast path when `A` is entrywise nonnegative, else the sweep.
pub fn numerical_radius_auto(a: &ComplexMatrix, tol: f64) -> Result<Enclosure> {
    if a.is_entrywise_nonnegative() {
        w_nonneg(a)
    } else {
        numerical_radius(a, tol)
    }
}
