//! Exact rational arithmetic, dense matrices and the convex-feasibility kernel.

mod hull;
mod lp;
mod matrix;
mod rational;

pub use hull::{zero_in_hull, HullCertificate, HullVerdict};
pub use lp::{feasible, positive_kernel_vector, Feasibility};
pub use matrix::{rank, RationalMatrix, RowEchelon};
pub use rational::{format_rational, int, parse_rational, primitive_integer_vector, ratio, Rational};

/// Dot product of two equal-length rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(num_traits::Zero::is_zero)
}
