//! Exact invariants of homogeneous isolated hypersurface singularities,
//! computed from their Milnor algebras.

pub mod associated;
pub mod cli;
pub mod binary;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod milnor;
mod numeric;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod sextic;
pub mod verify;

pub use binary::BinaryForm;
pub use poly::{Monomial, MonomialOrder, MultiPoly};
pub use scalar::ExactScalar;
