//! Term generation for the coupled system and for its decoupled scalar
//! recurrence, plus exact recurrence checking.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::gauss::{common_denominator, numerator_over, GaussInt};
use crate::algebra::Scalar;
use crate::decouple::{CoefficientVector, CoupledSystem};
use crate::error::{Error, Result};

/// Largest number of terms produced by the generators unless a caller
/// passes its own limit. Entries grow exponentially in the index.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Terms `a₀ … aₙ` and `b₀ … bₙ` of a coupled system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePair {
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
}

impl SequencePair {
    /// `tₙ = aₙ + bₙ`.
    pub fn sum(&self) -> Vec<Scalar> {
        self.combine(&Scalar::from_int(1), &Scalar::from_int(1))
    }

    /// `α·aₙ + β·bₙ`.
    pub fn combine(&self, alpha: &Scalar, beta: &Scalar) -> Vec<Scalar> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| &(alpha * a) + &(beta * b))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// A single sequence `z₀, z₁, …`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ScalarSequence {
    pub terms: Vec<Scalar>,
}

impl ScalarSequence {
    pub fn new(terms: Vec<Scalar>) -> Self {
        ScalarSequence { terms }
    }

    pub fn from_ints(terms: &[i64]) -> Self {
        Self::new(terms.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<Vec<Scalar>> for ScalarSequence {
    fn from(terms: Vec<Scalar>) -> Self {
        Self::new(terms)
    }
}

/// First `2s` terms of each component, enough to seed the decoupled
/// recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bootstrap {
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
    pub t: Vec<Scalar>,
}

/// Outcome of [`verify_recurrence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    /// First index checked (the recurrence order).
    pub checked_from: usize,
    /// Last index checked.
    pub checked_to: usize,
    /// Smallest `n` with `zₙ ≠ Σ cᵢ zₙ₋ᵢ`, if any.
    pub first_violation: Option<usize>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

fn check_horizon(n: usize, min: usize, limit: usize) -> Result<()> {
    if n < min {
        return Err(Error::HorizonTooShort { min, requested: n });
    }
    if n >= limit {
        return Err(Error::HorizonTooLong {
            requested: n + 1,
            limit,
        });
    }
    Ok(())
}

/// `a₀ … aₙ`, `b₀ … bₙ` of the coupled system.
pub fn generate_coupled(sys: &CoupledSystem, n: usize) -> Result<SequencePair> {
    generate_coupled_capped(sys, n, DEFAULT_MAX_TERMS)
}

pub fn generate_coupled_capped(
    sys: &CoupledSystem,
    n: usize,
    max_terms: usize,
) -> Result<SequencePair> {
    let s = sys.order();
    check_horizon(n, s - 1, max_terms)?;

    // With L clearing every matrix entry and M every initial value,
    // uₙ = M·Lⁿ·vₙ obeys uₙ = Σₜ Lᵗ·Aₜ·uₙ₋ₜ over the Gaussian integers.
    let l = common_denominator(sys.matrices().iter().flat_map(|m| m.rows().iter().flatten()));
    let m = common_denominator(sys.init_a().iter().chain(sys.init_b()));
    let mut l_pow = BigInt::one();
    let scaled: Vec<[[GaussInt; 2]; 2]> = sys
        .matrices()
        .iter()
        .map(|a| {
            l_pow *= &l;
            a.rows().clone().map(|r| r.map(|x| numerator_over(&x, &l_pow)))
        })
        .collect();

    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    let mut ua: Vec<GaussInt> = Vec::with_capacity(n + 1);
    let mut ub: Vec<GaussInt> = Vec::with_capacity(n + 1);
    let mut den = m;
    for i in 0..=n {
        if i < s {
            ua.push(numerator_over(&sys.init_a()[i], &den));
            ub.push(numerator_over(&sys.init_b()[i], &den));
            a.push(sys.init_a()[i].clone());
            b.push(sys.init_b()[i].clone());
        } else {
            let mut next_a = GaussInt::default();
            let mut next_b = GaussInt::default();
            for (t, [[p, q], [r, w]]) in scaled.iter().enumerate() {
                let (x, y) = (&ua[i - 1 - t], &ub[i - 1 - t]);
                next_a += &(&(p * x) + &(q * y));
                next_b += &(&(r * x) + &(w * y));
            }
            a.push(next_a.over(&den));
            b.push(next_b.over(&den));
            ua.push(next_a);
            ub.push(next_b);
        }
        den *= &l;
    }
    Ok(SequencePair { a, b })
}

/// First `2s` terms of `a`, `b` and `t = a + b`.
pub fn bootstrap_initials(sys: &CoupledSystem) -> Bootstrap {
    let pair = generate_coupled(sys, 2 * sys.order() - 1)
        .expect("2s - 1 is always a valid horizon");
    Bootstrap {
        t: pair.sum(),
        a: pair.a,
        b: pair.b,
    }
}

/// `z₀ … zₙ` from `init = (z₀ … z_{k−1})` and `zₘ = Σ cᵢ zₘ₋ᵢ` for `m ≥ k`.
pub fn generate_decoupled(
    c: &CoefficientVector,
    init: &[Scalar],
    n: usize,
) -> Result<ScalarSequence> {
    generate_decoupled_capped(c, init, n, DEFAULT_MAX_TERMS)
}

pub fn generate_decoupled_capped(
    c: &CoefficientVector,
    init: &[Scalar],
    n: usize,
    max_terms: usize,
) -> Result<ScalarSequence> {
    let k = c.len();
    if init.len() != k {
        return Err(Error::InitialLength {
            what: "the scalar recurrence",
            expected: k,
            found: init.len(),
        });
    }
    check_horizon(n, k.saturating_sub(1), max_terms)?;

    // wₘ = M·Cᵐ·zₘ obeys wₘ = Σ Cⁱ·cᵢ·wₘ₋ᵢ over the Gaussian integers.
    let cden = common_denominator(c.coeffs());
    let mut c_pow = BigInt::one();
    let scaled: Vec<GaussInt> = c
        .coeffs()
        .iter()
        .map(|ci| {
            c_pow *= &cden;
            numerator_over(ci, &c_pow)
        })
        .collect();

    let mut den = common_denominator(init);
    let mut w: Vec<GaussInt> = Vec::with_capacity(n + 1);
    let mut z = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if let Some(x) = init.get(m) {
            w.push(numerator_over(x, &den));
            z.push(x.clone());
        } else {
            let next = scaled_step(&scaled, &w, m);
            z.push(next.over(&den));
            w.push(next);
        }
        den *= &cden;
    }
    Ok(ScalarSequence::new(z))
}

/// `Σ coeffs[i]·w[m−1−i]`, skipping zero coefficients.
fn scaled_step(coeffs: &[GaussInt], w: &[GaussInt], m: usize) -> GaussInt {
    let mut acc = GaussInt::default();
    for (i, ci) in coeffs.iter().enumerate() {
        if !ci.is_zero() {
            acc += &(ci * &w[m - 1 - i]);
        }
    }
    acc
}

/// Checks `zₙ = Σ cᵢ zₙ₋ᵢ` for every `n` from the recurrence order `k` to
/// the last term. Needs at least `k + 1` terms.
pub fn verify_recurrence(z: &ScalarSequence, c: &CoefficientVector) -> Result<RecurrenceReport> {
    let k = c.len();
    if z.len() < k + 1 {
        return Err(Error::SequenceTooShort {
            min: k + 1,
            found: z.len(),
        });
    }
    // Clear denominators once: D·C·zₙ = Σ (C·cᵢ)·(D·zₙ₋ᵢ).
    let zden = common_denominator(&z.terms);
    let cden = common_denominator(c.coeffs());
    let scaled_c: Vec<GaussInt> = c.coeffs().iter().map(|ci| numerator_over(ci, &cden)).collect();
    let scaled_z: Vec<GaussInt> = z.terms.iter().map(|x| numerator_over(x, &zden)).collect();
    let first_violation =
        (k..z.len()).find(|&m| scaled_step(&scaled_c, &scaled_z, m) != scaled_z[m].scale(&cden));
    Ok(RecurrenceReport {
        checked_from: k,
        checked_to: z.len() - 1,
        first_violation,
    })
}
