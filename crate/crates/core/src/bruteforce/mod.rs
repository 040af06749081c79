//! Independent ground-truth oracle: exact finite-field linear algebra and
//! exhaustive enumeration of commuting and nilpotent-commuting pairs in the
//! three Lie algebras at desk scale.

pub mod census;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod space;

pub use census::{key_factors, orbit_census, CensusKey};
pub use field::{make_field, Fq, FqCtx};
pub use matrix::FqMat;
pub use poly::{monic_irreducibles, monic_polys, FPoly};
pub use space::{LieSpace, SpaceKind, SIZE_GUARD_BITS};
