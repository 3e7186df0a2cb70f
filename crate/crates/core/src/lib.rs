//! Construction and numerical verification of adversary matrices for the
//! collision and set-equality problems at explicit small sizes.
//!
//! The crate is organised around the pipeline:
//!
//! * [`partitions`] — Young-diagram combinatorics (enumeration, branching,
//!   hook-length dimensions, box distances);
//! * [`symgroup`] — permutations, symmetric-group characters, group actions
//!   on weight spaces, isotypic and kappa projectors;
//! * [`spaces`] — the e-basis, weight-graded subspaces of tensor powers,
//!   the restricted projectors and the residual/overlap quantities built
//!   from them;
//! * [`matchings`] — perfect matchings indexing the row blocks of the
//!   adversary matrix;
//! * [`adversary`] — assembly of the block operators, the embedded matrix,
//!   entrywise masks, the first-variable approximant, and legal filtering;
//! * [`verify`] — the spectral-norm engine and the named check suites that
//!   produce structured pass/fail reports.

pub mod adversary;
pub mod error;
pub mod linalg;
pub mod matchings;
pub mod partitions;
pub mod spaces;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
