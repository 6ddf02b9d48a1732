//! Scalar recurrence coefficients for a coupled 2×2 system.
//!
//! For matrices `A₁ … Aₛ` both component sequences satisfy
//! `zₙ = c₁zₙ₋₁ + … + c₂ₛzₙ₋₂ₛ` for `n ≥ 2s`. The coefficients are built
//! order by order: `c⁽ˢ⁾` is `c⁽ˢ⁻¹⁾` padded with two zeros, plus `tr(Aₛ)` at
//! position `s`, minus `ddet(Aᵢ, Aₛ)` at position `s + i` for `i < s`, minus
//! `det(Aₛ)` at position `2s`.
//!
//! Unrolling that recursion gives the closed form
//!
//! ```text
//! cₘ = [m ≤ s]·tr(Aₘ) − Σ_{i<j, i+j=m} ddet(Aᵢ, Aⱼ) − [m even]·det(A_{m/2})
//! ```
//!
//! and both are exposed so they can be checked against each other.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Mat2, Poly, Scalar};
use crate::error::{Error, Result};

/// Two sequences `(aₙ)`, `(bₙ)` with
/// `(aₙ, bₙ)ᵀ = Σₜ Aₜ (aₙ₋ₜ, bₙ₋ₜ)ᵀ` for `n ≥ s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoupledSystem {
    matrices: Vec<Mat2>,
    init_a: Vec<Scalar>,
    init_b: Vec<Scalar>,
}

impl CoupledSystem {
    pub fn new(matrices: Vec<Mat2>, init_a: Vec<Scalar>, init_b: Vec<Scalar>) -> Result<Self> {
        let s = matrices.len();
        if s == 0 {
            return Err(Error::EmptyOrder);
        }
        for (what, init) in [("a", &init_a), ("b", &init_b)] {
            if init.len() != s {
                return Err(Error::InitialLength {
                    what,
                    expected: s,
                    found: init.len(),
                });
            }
        }
        Ok(CoupledSystem {
            matrices,
            init_a,
            init_b,
        })
    }

    /// The same matrices with all-zero initial values.
    pub fn homogeneous(matrices: Vec<Mat2>) -> Result<Self> {
        let s = matrices.len();
        Self::new(matrices, vec![Scalar::zero(); s], vec![Scalar::zero(); s])
    }

    /// Order `s` of the vector recurrence.
    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Mat2] {
        &self.matrices
    }

    pub fn init_a(&self) -> &[Scalar] {
        &self.init_a
    }

    pub fn init_b(&self) -> &[Scalar] {
        &self.init_b
    }

    /// Swaps the roles of `a` and `b`: every `Aₜ` is conjugated by
    /// `[[0,1],[1,0]]` and the initial vectors trade places.
    pub fn swapped(&self) -> CoupledSystem {
        let swap = |m: &Mat2| {
            let [[p, q], [r, s]] = m.rows().clone();
            Mat2::new([[s, r], [q, p]])
        };
        CoupledSystem {
            matrices: self.matrices.iter().map(swap).collect(),
            init_a: self.init_b.clone(),
            init_b: self.init_a.clone(),
        }
    }
}

/// Coefficients `c₁ … c_k` of `zₙ = Σ cᵢ zₙ₋ᵢ`.
///
/// Produced with `k = 2s` by [`coefficients_recursive`] and
/// [`coefficients_closed`]; only [`trim_trailing_zeros`] shortens it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoefficientVector {
    coeffs: Vec<Scalar>,
}

impl CoefficientVector {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        CoefficientVector { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Order of the scalar recurrence (number of coefficients).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// 1-based access, matching `c₁ … c_k`.
    pub fn get(&self, i: usize) -> Option<&Scalar> {
        i.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    /// Integer view of the coefficients, when every entry is an integer.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| c.to_integer().and_then(|n| i64::try_from(n).ok()))
            .collect()
    }

    /// The recurrence as text, e.g. `z_n = 2 z_{n-1} + z_{n-2} - 2 z_{n-3} - z_{n-4}`.
    pub fn recurrence_string(&self) -> String {
        let mut out = String::from("z_n =");
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_real() && c.re() < &Default::default() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            out.push_str(match (first, neg) {
                (true, true) => " -",
                (true, false) => " ",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            first = false;
            if !mag.is_one() {
                if mag.is_real() {
                    out.push_str(&format!("{mag} "));
                } else {
                    out.push_str(&format!("({mag}) "));
                }
            }
            out.push_str(&format!("z_{{n-{}}}", i + 1));
        }
        if first {
            out.push_str(" 0");
        }
        out
    }
}

impl fmt::Debug for CoefficientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// Builds `c⁽ˢ⁾` order by order from `c⁽¹⁾ = (tr A₁, −det A₁)`.
pub fn coefficients_recursive(matrices: &[Mat2]) -> Result<CoefficientVector> {
    let (first, rest) = matrices.split_first().ok_or(Error::EmptyOrder)?;
    let mut c = vec![first.trace(), -first.det()];

    for (idx, a_s) in rest.iter().enumerate() {
        let s = idx + 2;
        c.extend([Scalar::zero(), Scalar::zero()]);
        // 0-based slot p holds c_{p+1}
        c[s - 1] += a_s.trace();
        for (i, a_i) in matrices[..s - 1].iter().enumerate() {
            c[s + i] -= a_i.ddet(a_s);
        }
        c[2 * s - 1] -= a_s.det();
    }
    Ok(CoefficientVector::new(c))
}

/// Evaluates each `cₘ` directly from the index pattern of the unrolled
/// recursion.
pub fn coefficients_closed(matrices: &[Mat2]) -> Result<CoefficientVector> {
    let s = matrices.len();
    if s == 0 {
        return Err(Error::EmptyOrder);
    }
    let a = |t: usize| &matrices[t - 1];
    let coeffs = (1..=2 * s)
        .map(|m| {
            let mut c = Scalar::zero();
            if m <= s {
                c += a(m).trace();
            }
            for i in 1..=(m - 1) / 2 {
                let j = m - i;
                if j <= s {
                    c -= a(i).ddet(a(j));
                }
            }
            if m % 2 == 0 {
                c -= a(m / 2).det();
            }
            c
        })
        .collect();
    Ok(CoefficientVector::new(coeffs))
}

/// The monic `x^k − c₁x^{k−1} − … − c_k`.
pub fn char_poly(c: &CoefficientVector) -> Poly {
    let k = c.len();
    let mut coeffs = vec![Scalar::zero(); k + 1];
    coeffs[k] = Scalar::one();
    for (i, ci) in c.coeffs().iter().enumerate() {
        coeffs[k - 1 - i] = -ci;
    }
    Poly::new(coeffs)
}

/// Drops trailing zero coefficients, lowering the recurrence order.
pub fn trim_trailing_zeros(c: &CoefficientVector) -> CoefficientVector {
    let keep = c
        .coeffs()
        .iter()
        .rposition(|x| !x.is_zero())
        .map_or(0, |p| p + 1);
    CoefficientVector::new(c.coeffs()[..keep].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tiling(s: usize) -> Vec<Mat2> {
        vec![Mat2::from_ints([[1, 0], [1, 1]]); s]
    }

    fn ints(c: &CoefficientVector) -> Vec<i64> {
        c.to_i64s().unwrap()
    }

    #[test]
    fn recursive_tiling_rows() {
        assert_eq!(ints(&coefficients_recursive(&tiling(1)).unwrap()), [2, -1]);
        assert_eq!(ints(&coefficients_recursive(&tiling(2)).unwrap()), [2, 1, -2, -1]);
        assert_eq!(
            ints(&coefficients_recursive(&tiling(3)).unwrap()),
            [2, 1, 0, -3, -2, -1]
        );
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(coefficients_recursive(&[]), Err(Error::EmptyOrder));
        assert_eq!(coefficients_closed(&[]), Err(Error::EmptyOrder));
        assert_eq!(Error::EmptyOrder.to_string(), "order must be at least 1");
    }

    #[test]
    fn closed_form_order_one() {
        assert_eq!(ints(&coefficients_closed(&tiling(1)).unwrap()), [2, -1]);
    }

    #[test]
    fn closed_form_order_two_symbolic_layout() {
        let a1 = Mat2::from_ints([[1, 2], [3, 4]]);
        let a2 = Mat2::from_ints([[5, -6], [7, 8]]);
        let c = coefficients_closed(&[a1.clone(), a2.clone()]).unwrap();
        assert_eq!(c.get(1), Some(&a1.trace()));
        assert_eq!(c.get(2), Some(&(-a1.det() + a2.trace())));
        assert_eq!(c.get(3), Some(&-a1.ddet(&a2)));
        assert_eq!(c.get(4), Some(&-a2.det()));
    }

    #[test]
    fn closed_form_all_zero() {
        let c = coefficients_closed(&vec![Mat2::zero(); 5]).unwrap();
        assert_eq!(c.len(), 10);
        assert!(c.coeffs().iter().all(Zero::is_zero));
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            char_poly(&CoefficientVector::from_ints(&[2, -1])),
            Poly::from_ints(&[1, -2, 1])
        );
        assert_eq!(
            char_poly(&CoefficientVector::from_ints(&[2, 1, -2, -1])),
            Poly::from_ints(&[1, 2, -1, -2, 1])
        );
        assert_eq!(
            char_poly(&CoefficientVector::from_ints(&[0, 0])),
            Poly::from_ints(&[0, 0, 1])
        );
        assert!(char_poly(&CoefficientVector::default()).is_monic());
    }

    #[test]
    fn trim_examples() {
        let full = CoefficientVector::from_ints(&[2, 1, -2, -1]);
        assert_eq!(trim_trailing_zeros(&full), full);
        assert_eq!(
            trim_trailing_zeros(&CoefficientVector::from_ints(&[2, -1, 0, 0])),
            CoefficientVector::from_ints(&[2, -1])
        );
        assert!(trim_trailing_zeros(&CoefficientVector::from_ints(&[0, 0, 0])).is_empty());
        // interior zeros stay
        assert_eq!(
            trim_trailing_zeros(&CoefficientVector::from_ints(&[0, 3, 0, 0])),
            CoefficientVector::from_ints(&[0, 3])
        );
    }

    #[test]
    fn singular_last_matrix_leaves_zero_tail() {
        let c = coefficients_recursive(&[
            Mat2::from_ints([[1, 1], [1, 0]]),
            Mat2::zero(),
        ])
        .unwrap();
        assert_eq!(ints(&c), [1, 1, 0, 0]);
        assert_eq!(ints(&trim_trailing_zeros(&c)), [1, 1]);
    }

    #[test]
    fn recurrence_text() {
        assert_eq!(
            CoefficientVector::from_ints(&[2, 1, -2, -1]).recurrence_string(),
            "z_n = 2 z_{n-1} + z_{n-2} - 2 z_{n-3} - z_{n-4}"
        );
        assert_eq!(
            CoefficientVector::from_ints(&[2, 1, 0, -3, -2, -1]).recurrence_string(),
            "z_n = 2 z_{n-1} + z_{n-2} - 3 z_{n-4} - 2 z_{n-5} - z_{n-6}"
        );
        assert_eq!(
            CoefficientVector::from_ints(&[-1, 0]).recurrence_string(),
            "z_n = -z_{n-1}"
        );
        assert_eq!(CoefficientVector::from_ints(&[0]).recurrence_string(), "z_n = 0");
    }

    #[test]
    fn system_validation() {
        let m = tiling(2);
        assert!(CoupledSystem::new(m.clone(), vec![1.into(), 1.into()], vec![0.into()]).is_err());
        assert_eq!(
            CoupledSystem::new(vec![], vec![], vec![]),
            Err(Error::EmptyOrder)
        );
        let sys = CoupledSystem::homogeneous(m).unwrap();
        assert_eq!(sys.order(), 2);
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9)
            .prop_map(|(a, b, c, d)| Scalar::gaussian(a, b, c, d))
    }

    fn arb_mats(max: usize) -> impl Strategy<Value = Vec<Mat2>> {
        proptest::collection::vec(
            proptest::array::uniform4(arb_scalar())
                .prop_map(|[a, b, c, d]| Mat2::new([[a, b], [c, d]])),
            1..=max,
        )
    }

    proptest! {
        #[test]
        fn recursion_matches_closed_form(ms in arb_mats(8)) {
            prop_assert_eq!(
                coefficients_recursive(&ms).unwrap(),
                coefficients_closed(&ms).unwrap()
            );
        }

        #[test]
        fn end_coefficients(ms in arb_mats(8)) {
            let c = coefficients_recursive(&ms).unwrap();
            let s = ms.len();
            prop_assert_eq!(c.len(), 2 * s);
            prop_assert_eq!(c.get(1).unwrap(), &ms[0].trace());
            prop_assert_eq!(c.get(2 * s).unwrap(), &-ms[s - 1].det());
        }

        #[test]
        fn component_swap_invariance(ms in arb_mats(6)) {
            let sys = CoupledSystem::homogeneous(ms.clone()).unwrap();
            let swapped = sys.swapped();
            prop_assert_eq!(
                coefficients_recursive(sys.matrices()).unwrap(),
                coefficients_recursive(swapped.matrices()).unwrap()
            );
        }
    }
}
