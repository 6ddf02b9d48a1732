//! Exact scalars, 2×2 matrices and dense polynomials.

pub(crate) mod gauss;
mod mat2;
mod poly;
mod scalar;

pub use mat2::{ddet, det, mix, trace, Mat2};
pub use poly::{poly_add, poly_eval, poly_mul, Poly};
pub use scalar::Scalar;
