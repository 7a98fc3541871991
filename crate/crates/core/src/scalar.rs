//! Scalar minimization over a parameter interval.

/// Uniform grid size used for every min-over-t bound.
pub const T_GRID_POINTS: usize = 201;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Minimum found by [`minimize_on_unit_interval`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarMin {
    pub t: f64,
    pub value: f64,
}

/// `points` equispaced values on `[0, 1]`, endpoints exact.
pub fn unit_grid(points: usize) -> Vec<f64> {
    assert!(points >= 2);
    let last = (points - 1) as f64;
    (0..points).map(|k| k as f64 / last).collect()
}

/// Golden-section search for a local minimum of `f` on `[a, b]`.
///
/// Returns the best point evaluated, which for a unimodal `f` lies within
/// `xtol` of the minimizer.
pub fn golden_section_min(f: impl Fn(f64) -> f64, a: f64, b: f64, xtol: f64) -> ScalarMin {
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut best = if f1 <= f2 {
        ScalarMin { t: x1, value: f1 }
    } else {
        ScalarMin { t: x2, value: f2 }
    };
    while hi - lo > xtol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
            if f1 < best.value {
                best = ScalarMin { t: x1, value: f1 };
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
            if f2 < best.value {
                best = ScalarMin { t: x2, value: f2 };
            }
        }
    }
    best
}

/// Minimum of `f` over `[0, 1]`: the best of a 201-point uniform grid,
/// refined by golden-section search on the two grid cells around the grid
/// argmin. No global optimality is claimed; ties keep the smallest `t`.
pub fn minimize_on_unit_interval(f: impl Fn(f64) -> f64) -> ScalarMin {
    let grid = unit_grid(T_GRID_POINTS);
    let values: Vec<f64> = grid.iter().map(|&t| f(t)).collect();
    let mut k = 0;
    for (i, &v) in values.iter().enumerate() {
        if v < values[k] {
            k = i;
        }
    }
    let grid_best = ScalarMin {
        t: grid[k],
        value: values[k],
    };
    let a = grid[k.saturating_sub(1)];
    let b = grid[(k + 1).min(grid.len() - 1)];
    let refined = golden_section_min(&f, a, b, 1e-10);
    if refined.value < grid_best.value {
        refined
    } else {
        grid_best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_has_exact_anchor_points() {
        let g = unit_grid(T_GRID_POINTS);
        assert_eq!(g.len(), 201);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[100], 0.5);
        assert_eq!(g[200], 1.0);
    }

    #[test]
    fn golden_finds_parabola_minimum() {
        let m = golden_section_min(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-10);
        assert!((m.t - 0.3).abs() < 1e-8);
        assert!((m.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn endpoint_minimum_is_kept() {
        let m = minimize_on_unit_interval(|t| 2.0 + t);
        assert_eq!(m, ScalarMin { t: 0.0, value: 2.0 });
        let m = minimize_on_unit_interval(|t| 2.0 - t);
        assert_eq!(m.t, 1.0);
    }

    #[test]
    fn interior_minimum_is_refined_below_grid() {
        let target = 0.123_456_7;
        let m = minimize_on_unit_interval(|t| (t - target).abs());
        assert!((m.t - target).abs() < 1e-9);
    }
}
