//! Command-line plumbing around `wradius-core`: matrix files, seeded random
//! ensembles, bound reports, invariant verification and the bundled
//! regression fixtures.

pub mod catalogue;
pub mod ensemble;
pub mod error;
pub mod fixtures;
pub mod matfile;
pub mod report;
pub mod verify;

pub use ensemble::{EnsembleKind, EnsembleSpec};
pub use error::{HarnessError, Result};
pub use matfile::MatrixFile;
pub use report::{Format, Report};
