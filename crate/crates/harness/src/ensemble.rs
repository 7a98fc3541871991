//! Seeded random ensembles of block operator matrices.
//!
//! Instance `k` of a spec is drawn from ChaCha8 seeded with `seed`, on
//! stream `k`, so instances can be generated in any order or in parallel.
//! Complex Gaussian entries have independent standard normal real and
//! imaginary parts.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use wradius_core::matcore::hermitian_eig;
use wradius_core::{BlockOperatorMatrix, ComplexMatrix, C64};

use crate::error::{HarnessError, Result};

/// Environment variable that overrides the seed of every spec.
pub const SEED_ENV: &str = "WRADIUS_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleKind {
    /// Complex Gaussian blocks.
    Gaussian,
    /// Square-zero strictly upper triangular: Gaussian on the top-right corner.
    Nilpotent,
    /// `U diag(z) U*` with Haar-like `U` and complex Gaussian `z`.
    Normal,
    /// `G*G`.
    Positive,
    /// Weighted forward shift with weights `|g_k|`.
    Shift,
}

impl EnsembleKind {
    pub const ALL: [EnsembleKind; 5] = [
        EnsembleKind::Gaussian,
        EnsembleKind::Nilpotent,
        EnsembleKind::Normal,
        EnsembleKind::Positive,
        EnsembleKind::Shift,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            EnsembleKind::Gaussian => "gaussian",
            EnsembleKind::Nilpotent => "nilpotent",
            EnsembleKind::Normal => "normal",
            EnsembleKind::Positive => "positive",
            EnsembleKind::Shift => "shift",
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EnsembleKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| HarnessError::Usage(format!("unknown ensemble `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnsembleSpec {
    pub seed: u64,
    pub count: usize,
    pub n: usize,
    pub d: usize,
    pub ensemble: EnsembleKind,
}

impl EnsembleSpec {
    pub fn new(
        seed: u64,
        count: usize,
        n: usize,
        d: usize,
        ensemble: EnsembleKind,
    ) -> Result<Self> {
        if count == 0 {
            return Err(HarnessError::Usage("count must be at least 1".into()));
        }
        if n == 0 || d == 0 {
            return Err(HarnessError::Usage("n and d must be positive".into()));
        }
        Ok(EnsembleSpec {
            seed,
            count,
            n,
            d,
            ensemble,
        })
    }

    /// Replaces the seed with `WRADIUS_SEED` when that variable is set.
    pub fn with_env_seed(self) -> Result<Self> {
        match std::env::var(SEED_ENV) {
            Ok(v) => {
                let seed = v
                    .trim()
                    .parse()
                    .map_err(|_| HarnessError::Usage(format!("{SEED_ENV}={v} is not a u64")))?;
                Ok(EnsembleSpec { seed, ..self })
            }
            Err(_) => Ok(self),
        }
    }

    /// Generator for instance `index`.
    pub fn rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }

    /// Generator for the random probes of instance `index`, independent of
    /// the one that built the matrix.
    pub fn check_rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64 | 1 << 63);
        rng
    }

    pub fn instance(&self, index: usize) -> BlockOperatorMatrix {
        let mut rng = self.rng(index);
        let m = self.n * self.d;
        let flat = match self.ensemble {
            EnsembleKind::Gaussian => gaussian(&mut rng, m, m),
            EnsembleKind::Nilpotent => {
                let k = m.div_ceil(2);
                let corner = gaussian(&mut rng, k, m - k);
                ComplexMatrix::from_fn(m, m, |i, j| {
                    if i < k && j >= k {
                        corner[(i, j - k)]
                    } else {
                        C64::new(0.0, 0.0)
                    }
                })
            }
            EnsembleKind::Normal => {
                let u = unitary(&mut rng, m);
                let z: Vec<C64> = (0..m).map(|_| gaussian_entry(&mut rng)).collect();
                let d =
                    ComplexMatrix::from_fn(
                        m,
                        m,
                        |i, j| if i == j { z[i] } else { C64::new(0.0, 0.0) },
                    );
                &(&u * &d) * &u.adjoint()
            }
            EnsembleKind::Positive => {
                let g = gaussian(&mut rng, m, m);
                (&g.adjoint() * &g).hermitian_part()
            }
            EnsembleKind::Shift => {
                let w: Vec<f64> = (0..m).map(|_| gaussian_entry(&mut rng).re.abs()).collect();
                ComplexMatrix::from_fn(m, m, |i, j| {
                    if j == i + 1 {
                        C64::new(w[i], 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                })
            }
        };
        BlockOperatorMatrix::from_flat(&flat, self.d).expect("dimension is a multiple of d")
    }

    pub fn instances(&self) -> impl Iterator<Item = BlockOperatorMatrix> + '_ {
        (0..self.count).map(|k| self.instance(k))
    }
}

fn gaussian_entry(rng: &mut ChaCha8Rng) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im)
}

fn gaussian(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian_entry(rng))
}

fn unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let h = gaussian(rng, n, n).hermitian_part();
    hermitian_eig(&h)
        .expect("Hermitian by construction")
        .eigenvectors
}
