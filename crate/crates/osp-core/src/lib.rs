//! Exact combinatorics for odd symplectic grassmannians and flag manifolds:
//! signed-permutation Weyl sets and Bruhat order, Schubert cells and their
//! echelon matrices, Poincaré polynomials, orbit stratifications, branching
//! and dimension formulas, and a tensor-level oracle that recomputes the
//! representation-theoretic dimensions from scratch.

pub mod bott;
pub mod echelon;
pub mod error;
pub mod exact;
pub mod form;
pub mod indices;
pub mod oracle;
pub mod orbits;
pub mod partitions;
pub mod poincare;
pub mod rep;
pub mod schubert;
pub mod weyl;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, ExactScalar};
pub use form::OddSymplecticForm;
pub use indices::AdmissibleIndex;
pub use partitions::Partition;
pub use poincare::{IntPolynomial, Space};
pub use weyl::{Family, Letter, SignedPermutation};
