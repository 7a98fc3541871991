//! Numerical radius of complex matrices and block operator matrices.
//!
//! The crate is organised bottom-up:
//!
//! * [`matcore`] dense complex matrices, a Jacobi Hermitian eigensolver and a
//!   one-sided Jacobi SVD;
//! * [`specfun`] spectral functions of positive semidefinite matrices, the
//!   polar partial isometry and contraction factorizations `A = g(|A*|) K f(|A|)`;
//! * [`radius`] certified enclosures of the numerical radius `w(A)`;
//! * [`bounds`] upper bounds for `w` of block operator matrices built from
//!   nonnegative auxiliary matrices, plus the single-operator, product and
//!   commutator bounds derived from them.

pub mod bounds;
pub mod enclosure;
pub mod error;
pub mod matcore;
pub mod radius;
pub mod scalar;
pub mod specfun;

pub use bounds::{BlockOperatorMatrix, BoundId, BoundResult};
pub use enclosure::{Enclosure, EnclosureKind};
pub use error::{Error, Result};
pub use matcore::{ComplexMatrix, HermitianEig, SvdFactors, C64};
pub use radius::{numerical_radius, w_nonneg};
