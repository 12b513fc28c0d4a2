//! Border homology and cohomology of filtered simplicial models.
//!
//! The library computes homology-type invariants of non-compact spaces
//! presented as truncated exhaustions of locally finite simplicial complexes.
//! Open covers whose complement is compact ("border covers") yield nerve
//! complexes; refinement projections induce inverse and direct systems of
//! finitely generated abelian groups, and the limit values (with an explicit
//! stabilization certificate) are the border homology and cohomology groups
//! of the model.
//!
//! Everything is exact: integer matrices with unbounded entries, Smith normal
//! form, and canonical invariant-factor presentations. No floating point.

pub mod abelian;
pub mod border;
pub mod covers;
pub mod limits;
pub mod simplicial;
pub mod spaces;

mod error;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
