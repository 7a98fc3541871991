//! Upper bounds for the numerical radius.
//!
//! Each bound is reported as the numerical radius of a small entrywise
//! nonnegative auxiliary matrix, evaluated with the nonnegative fast path.

mod block;
mod catalogue;
mod id;
mod operator;

pub use block::BlockOperatorMatrix;
pub use catalogue::{aux_matrix, evaluate_bound, minimize_over_t, BlockBounds};
pub use id::{BoundId, BoundResult, EntryArgmin};
pub use operator::{
    commutator_bound, lower_bound_sum, product_bound, single_operator_bound, sum_product_bound,
    two_block_bound, SingleVariant, SumProductVariant, TwoBlockVariant,
};

use crate::matcore::{hermitian_eigenvalues, ComplexMatrix};

/// Operator norm of a Hermitian matrix via its spectrum.
pub(crate) fn psd_norm(m: &ComplexMatrix) -> f64 {
    hermitian_eigenvalues(m)
        .map(|ev| ev.iter().fold(0.0_f64, |acc, x| acc.max(x.abs())))
        .unwrap_or(f64::NAN)
}
