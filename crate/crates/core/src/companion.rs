//! Block companion matrix of a coupled system and a generic
//! characteristic polynomial, used as an oracle for [`crate::decouple`].
//!
//! The state `wₙ = (aₙ, bₙ, aₙ₋₁, bₙ₋₁, …, aₙ₋ₛ₊₁, bₙ₋ₛ₊₁)` evolves as
//! `wₙ = M wₙ₋₁`, where the first two rows of `M` hold `A₁ A₂ … Aₛ` side by
//! side and 2×2 identity blocks sit on the block subdiagonal.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::algebra::{Poly, Scalar};
use crate::decouple::CoupledSystem;
use crate::error::{Error, Result};

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn zero(dim: usize) -> Self {
        SquareMatrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 0-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn add_diagonal(&mut self, c: &Scalar) {
        for i in 0..self.dim {
            self.entries[i * self.dim + i] += c;
        }
    }

    /// `self · w`.
    pub fn apply(&self, w: &[Scalar]) -> Result<Vec<Scalar>> {
        if w.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.len(),
            });
        }
        Ok((0..self.dim)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(w)
                    .filter(|(m, _)| !m.is_zero())
                    .map(|(m, x)| m * x)
                    .sum()
            })
            .collect())
    }

    /// `p(self)` by Horner's scheme.
    pub fn eval_poly(&self, p: &Poly) -> SquareMatrix {
        let mut acc = SquareMatrix::zero(self.dim);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            acc.add_diagonal(c);
        }
        acc
    }
}

impl<'a> Mul<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = SquareMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.dim).map(|r| self.row(r)))
            .finish()
    }
}

/// The `2s × 2s` block companion matrix of `sys`.
pub fn build_companion(sys: &CoupledSystem) -> SquareMatrix {
    let s = sys.order();
    let n = 2 * s;
    let mut m = SquareMatrix::zero(n);
    for (t, a) in sys.matrices().iter().enumerate() {
        for r in 0..2 {
            for c in 0..2 {
                m.set(r, 2 * t + c, a.rows()[r][c].clone());
            }
        }
    }
    for i in 2..n {
        m.set(i, i - 2, Scalar::one());
    }
    m
}

/// Monic `det(xI − m)` by the Faddeev–LeVerrier recursion
///
/// ```text
/// M₀ = 0, c_n = 1,
/// Mₖ = m·Mₖ₋₁ + c_{n−k+1}·I,   c_{n−k} = −tr(m·Mₖ) / k.
/// ```
///
/// Only ring operations and division by `k ≤ n` are needed, so the result
/// is exact over the rationals.
pub fn char_poly_oracle(m: &SquareMatrix) -> Poly {
    let n = m.dim();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = SquareMatrix::zero(n);
    for k in 1..=n {
        // mk = m·M_{k-1} + c_{n-k+1}·I
        mk = m * &mk;
        mk.add_diagonal(&coeffs[n - k + 1]);
        let am = m * &mk;
        let k_inv = Scalar::ratio(1, k as i64);
        coeffs[n - k] = -(am.trace() * k_inv);
    }
    Poly::new(coeffs)
}

/// One step `w ↦ m·w` of the state recurrence.
pub fn step(m: &SquareMatrix, w: &[Scalar]) -> Result<Vec<Scalar>> {
    m.apply(w)
}

/// Initial state `w₀ = (a_{s−1}, b_{s−1}, …, a₀, b₀)`.
pub fn initial_state(sys: &CoupledSystem) -> Vec<Scalar> {
    sys.init_a()
        .iter()
        .zip(sys.init_b())
        .rev()
        .flat_map(|(a, b)| [a.clone(), b.clone()])
        .collect()
}
