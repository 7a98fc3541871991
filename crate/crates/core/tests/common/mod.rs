//! Seeded random matrices shared by the integration suites.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use wradius_core::bounds::BlockOperatorMatrix;
use wradius_core::matcore::{hermitian_eig, matmul};
use wradius_core::{ComplexMatrix, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_c64(rng: &mut ChaCha8Rng) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im)
}

pub fn gaussian(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian_c64(rng))
}

pub fn gaussian_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    (0..n).map(|_| gaussian_c64(rng)).collect()
}

pub fn unit_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    let v = gaussian_vector(rng, n);
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    gaussian(rng, n, n).hermitian_part()
}

/// `G*G` for Gaussian `G`.
pub fn positive(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let g = gaussian(rng, n, n);
    matmul(&g.adjoint(), &g).unwrap().hermitian_part()
}

/// Unitary from the eigenvectors of a random Hermitian matrix.
pub fn unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    hermitian_eig(&hermitian(rng, n)).unwrap().eigenvectors
}

/// `U diag(z) U*` with complex Gaussian `z`.
pub fn normal(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let u = unitary(rng, n);
    let z: Vec<C64> = gaussian_vector(rng, n);
    let d = ComplexMatrix::from_fn(n, n, |i, j| if i == j { z[i] } else { C64::new(0.0, 0.0) });
    &(&u * &d) * &u.adjoint()
}

pub fn block(rng: &mut ChaCha8Rng, n: usize, d: usize) -> BlockOperatorMatrix {
    let blocks = (0..n * n).map(|_| gaussian(rng, d, d)).collect();
    BlockOperatorMatrix::new(n, d, blocks).unwrap()
}

/// 2×2 block off-diagonal pair `[[0, A], [B, 0]]` as a flat matrix.
pub fn off_diagonal(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    BlockOperatorMatrix::off_diagonal_pair(a, b)
        .unwrap()
        .flatten()
}

pub mod strategy {
    use proptest::prelude::*;
    use wradius_core::{ComplexMatrix, C64};

    fn from_parts(rows: usize, cols: usize, v: Vec<f64>) -> ComplexMatrix {
        ComplexMatrix::from_fn(rows, cols, |i, j| {
            let k = 2 * (i * cols + j);
            C64::new(v[k], v[k + 1])
        })
    }

    /// Square complex matrix of dimension `1..=max_dim`, entries in `[-3, 3]`.
    pub fn square(max_dim: usize) -> impl Strategy<Value = ComplexMatrix> {
        (1..=max_dim).prop_flat_map(|n| {
            prop::collection::vec(-3.0..3.0f64, 2 * n * n).prop_map(move |v| from_parts(n, n, v))
        })
    }

    /// Two square matrices of a common dimension.
    pub fn square_pair(max_dim: usize) -> impl Strategy<Value = (ComplexMatrix, ComplexMatrix)> {
        (1..=max_dim).prop_flat_map(|n| {
            prop::collection::vec(-3.0..3.0f64, 4 * n * n).prop_map(move |v| {
                let (a, b) = v.split_at(2 * n * n);
                (from_parts(n, n, a.to_vec()), from_parts(n, n, b.to_vec()))
            })
        })
    }

    /// Rectangular complex matrix with both sides in `1..=max_dim`.
    pub fn rectangular(max_dim: usize) -> impl Strategy<Value = ComplexMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3.0..3.0f64, 2 * r * c).prop_map(move |v| from_parts(r, c, v))
        })
    }

    /// Entrywise nonnegative real pair `A ≤ B`.
    pub fn nonneg_ordered(max_dim: usize) -> impl Strategy<Value = (ComplexMatrix, ComplexMatrix)> {
        (1..=max_dim).prop_flat_map(|n| {
            (
                prop::collection::vec(0.0..2.0f64, n * n),
                prop::collection::vec(0.0..2.0f64, n * n),
            )
                .prop_map(move |(a, extra)| {
                    let b: Vec<f64> = a.iter().zip(&extra).map(|(x, e)| x + e).collect();
                    (
                        ComplexMatrix::from_real(n, n, &a).unwrap(),
                        ComplexMatrix::from_real(n, n, &b).unwrap(),
                    )
                })
        })
    }
}
