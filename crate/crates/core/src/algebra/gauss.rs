//! Gaussian integers and common-denominator scaling, used by the sequence
//! generators to run long recurrences without a gcd per operation.

use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn real(re: BigInt) -> Self {
        GaussInt {
            re,
            im: BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> GaussInt {
        GaussInt {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// `self / den` as an exact reduced scalar.
    pub fn over(&self, den: &BigInt) -> Scalar {
        Scalar::new(
            BigRational::new(self.re.clone(), den.clone()),
            BigRational::new(self.im.clone(), den.clone()),
        )
    }
}

impl<'a> Add<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, rhs: &GaussInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Mul<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussInt::real(&self.re * &rhs.re),
            (true, false) => rhs.scale(&self.re),
            (false, true) => self.scale(&rhs.re),
            (false, false) => GaussInt {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

/// Least common multiple of the denominators of both parts of every value.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, x| {
        let acc = acc.lcm(x.re().denom());
        acc.lcm(x.im().denom())
    })
}

/// `x · den`, which must be a Gaussian integer.
pub(crate) fn numerator_over(x: &Scalar, den: &BigInt) -> GaussInt {
    let part = |r: &BigRational| {
        debug_assert!((den % r.denom()).is_zero());
        r.numer() * (den / r.denom())
    };
    GaussInt {
        re: part(x.re()),
        im: part(x.im()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_round_trip() {
        let xs = [
            Scalar::gaussian(1, 6, -3, 4),
            Scalar::ratio(5, 9),
            Scalar::from_int(-7),
        ];
        let d = common_denominator(&xs);
        assert_eq!(d, BigInt::from(36));
        for x in &xs {
            assert_eq!(&numerator_over(x, &d).over(&d), x);
        }
    }

    #[test]
    fn product_matches_scalar_product() {
        let x = Scalar::gaussian(2, 1, -3, 1);
        let y = Scalar::gaussian(-5, 1, 7, 1);
        let one = BigInt::one();
        let p = &numerator_over(&x, &one) * &numerator_over(&y, &one);
        assert_eq!(p.over(&one), &x * &y);
    }
}
