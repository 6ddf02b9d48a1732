//! Exact decoupling of two coupled higher-order linear recurrences.
//!
//! A pair of sequences driven by 2×2 coefficient matrices `A₁ … Aₛ`,
//!
//! ```text
//! (aₙ, bₙ)ᵀ = A₁ (aₙ₋₁, bₙ₋₁)ᵀ + … + Aₛ (aₙ₋ₛ, bₙ₋ₛ)ᵀ,
//! ```
//!
//! has components that each satisfy one scalar recurrence of order `2s`.
//! [`decouple`] computes its coefficients from traces, determinants and
//! mixed-column determinants of the matrices; [`companion`] provides an
//! independent check through the characteristic polynomial of the block
//! companion matrix. All arithmetic is exact over the Gaussian rationals.
//!
//! The [`tiling`] module instantiates the construction on the black/white
//! piece tiling problem, where the `aₙ` are the k-bonacci numbers.

pub mod algebra;
pub mod cli;
pub mod companion;
pub mod decouple;
mod error;
pub mod sequence;
pub mod tiling;

pub use algebra::{Mat2, Poly, Scalar};
pub use companion::SquareMatrix;
pub use decouple::{CoefficientVector, CoupledSystem};
pub use error::{Error, Result};
pub use sequence::{ScalarSequence, SequencePair};
