use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

/// An `n × n` grid of `d × d` blocks acting on `H ⊕ … ⊕ H` with `dim H = d`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockOperatorMatrix {
    n: usize,
    d: usize,
    blocks: Vec<ComplexMatrix>,
}

impl BlockOperatorMatrix {
    /// Blocks in row-major grid order.
    pub fn new(n: usize, d: usize, blocks: Vec<ComplexMatrix>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::BlockLayout(format!("grid {n} with block size {d}")));
        }
        if blocks.len() != n * n {
            return Err(Error::BlockLayout(format!(
                "expected {} blocks for a {n}x{n} grid, got {}",
                n * n,
                blocks.len()
            )));
        }
        if let Some((k, b)) = blocks.iter().enumerate().find(|(_, b)| b.shape() != (d, d)) {
            return Err(Error::BlockLayout(format!(
                "block ({}, {}) is {}x{}, expected {d}x{d}",
                k / n,
                k % n,
                b.rows(),
                b.cols()
            )));
        }
        Ok(BlockOperatorMatrix { n, d, blocks })
    }

    /// Builds from nested rows of blocks; the block size is taken from `(0, 0)`.
    pub fn from_rows(rows: Vec<Vec<ComplexMatrix>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::BlockLayout("block grid is not square".into()));
        }
        let d = rows
            .first()
            .and_then(|r| r.first())
            .map(|b| b.rows())
            .ok_or_else(|| Error::BlockLayout("empty block grid".into()))?;
        Self::new(n, d, rows.into_iter().flatten().collect())
    }

    /// `[[0, a], [b, 0]]`.
    pub fn off_diagonal_pair(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Self> {
        let d = a.ensure_square()?;
        let z = ComplexMatrix::zeros(d, d);
        Self::from_rows(vec![vec![z.clone(), a.clone()], vec![b.clone(), z]])
    }

    /// Splits an `(n·d) × (n·d)` matrix into `d × d` blocks.
    pub fn from_flat(m: &ComplexMatrix, d: usize) -> Result<Self> {
        let size = m.ensure_square()?;
        if d == 0 || size % d != 0 {
            return Err(Error::BlockLayout(format!(
                "block size {d} does not divide dimension {size}"
            )));
        }
        let n = size / d;
        let blocks = (0..n * n)
            .map(|k| m.submatrix((k / n) * d, (k % n) * d, d, d))
            .collect();
        Self::new(n, d, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn block(&self, i: usize, j: usize) -> &ComplexMatrix {
        &self.blocks[i * self.n + j]
    }

    pub fn blocks(&self) -> &[ComplexMatrix] {
        &self.blocks
    }

    /// The `(n·d) × (n·d)` matrix this grid represents.
    pub fn flatten(&self) -> ComplexMatrix {
        let (n, d) = (self.n, self.d);
        ComplexMatrix::from_fn(n * d, n * d, |r, c| {
            self.block(r / d, c / d)[(r % d, c % d)]
        })
    }
}
