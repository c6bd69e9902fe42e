//! Exact criteria for standard solvable groups `U ⋊ A`.
//!
//! A group is described by the weight-graded nilpotent Lie algebra of `U`
//! together with the rank of the abelian group `A` acting on it. Everything
//! downstream (tameness, graded Chevalley–Eilenberg homology, Dehn-function
//! bounds, cone dimension, hyperbolicity) is decided with exact rational
//! arithmetic.

pub mod classify;
pub mod error;
pub mod exactla;
pub mod families;
pub mod homology;
pub mod lie;
pub mod tameness;
pub mod weights;

pub use error::{Error, Result};
pub use exactla::{zero_in_hull, HullCertificate, HullVerdict, Rational, RationalMatrix};
pub use lie::{FieldKind, FieldTag, GradedLieAlgebra, Subspace};
pub use weights::WeightDiagram;


