//! Exact-arithmetic kernel for order-theoretic integral extensions.
//!
//! The crate implements vertical and lateral extensions of order-preserving
//! linear maps on partially ordered vector spaces, verifies membership and
//! integral claims from finitely presented countable witnesses, and checks
//! the structural predicates (mediated, splitting, integrally closed, …) on a
//! catalog of concrete spaces. All arithmetic is rational and exact; every
//! Proved or Refuted verdict carries a certificate that re-checks
//! independently.

pub mod classify;
pub mod families;
pub mod funcdesc;
pub mod integral;
pub mod lateral;
pub mod measure;
pub mod measure_ops;
pub mod norm;
pub mod rat;
pub mod sets;
pub mod spaces;
pub mod verdict;
pub mod vertical;

pub use rat::Rat;
pub use spaces::{SpaceElement, SpaceId};
