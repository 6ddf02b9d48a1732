use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::Scalar;

/// A 2×2 matrix of [`Scalar`]s.
///
/// Entry `(r, c)` with 1-based `r, c` is the coefficient of the `c`-th
/// component (1 = `a`, 2 = `b`) in the update of the `r`-th component.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mat2 {
    rows: [[Scalar; 2]; 2],
}

impl Mat2 {
    pub fn new(rows: [[Scalar; 2]; 2]) -> Self {
        Mat2 { rows }
    }

    pub fn from_ints(rows: [[i64; 2]; 2]) -> Self {
        Mat2 {
            rows: rows.map(|r| r.map(Scalar::from_int)),
        }
    }

    pub fn zero() -> Self {
        Mat2::default()
    }

    pub fn identity() -> Self {
        Mat2::from_ints([[1, 0], [0, 1]])
    }

    /// 1-based entry access. Panics outside `1..=2`.
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.rows[row - 1][col - 1]
    }

    pub fn rows(&self) -> &[[Scalar; 2]; 2] {
        &self.rows
    }

    pub fn trace(&self) -> Scalar {
        &self.rows[0][0] + &self.rows[1][1]
    }

    pub fn det(&self) -> Scalar {
        let [[p, q], [r, s]] = &self.rows;
        &(p * s) - &(q * r)
    }

    /// First column from `self`, second column from `other`.
    pub fn mix(&self, other: &Mat2) -> Mat2 {
        Mat2::new([
            [self.rows[0][0].clone(), other.rows[0][1].clone()],
            [self.rows[1][0].clone(), other.rows[1][1].clone()],
        ])
    }

    /// `det(mix(self, other)) + det(mix(other, self))`, symmetric in its
    /// arguments and equal to `2·det(self)` when both are the same.
    pub fn ddet(&self, other: &Mat2) -> Scalar {
        self.mix(other).det() + other.mix(self).det()
    }

    pub fn scale(&self, k: &Scalar) -> Mat2 {
        Mat2 {
            rows: self.rows.clone().map(|r| r.map(|x| &x * k)),
        }
    }

    pub fn apply(&self, v: &[Scalar; 2]) -> [Scalar; 2] {
        [
            &(&self.rows[0][0] * &v[0]) + &(&self.rows[0][1] * &v[1]),
            &(&self.rows[1][0] * &v[0]) + &(&self.rows[1][1] * &v[1]),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self == &Mat2::identity()
    }
}

pub fn trace(m: &Mat2) -> Scalar {
    m.trace()
}

pub fn det(m: &Mat2) -> Scalar {
    m.det()
}

pub fn mix(ai: &Mat2, aj: &Mat2) -> Mat2 {
    ai.mix(aj)
}

pub fn ddet(ai: &Mat2, aj: &Mat2) -> Scalar {
    ai.ddet(aj)
}

impl<'a> Add<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        let e = |r: usize, c: usize| &self.rows[r][c] + &rhs.rows[r][c];
        Mat2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl<'a> Sub<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &Mat2) -> Mat2 {
        let e = |r: usize, c: usize| &self.rows[r][c] - &rhs.rows[r][c];
        Mat2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let e = |r: usize, c: usize| {
            &(&self.rows[r][0] * &rhs.rows[0][c]) + &(&self.rows[r][1] * &rhs.rows[1][c])
        };
        Mat2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[p, q], [r, s]] = &self.rows;
        write!(f, "[[{p}, {q}], [{r}, {s}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: [[i64; 2]; 2]) -> Mat2 {
        Mat2::from_ints(rows)
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(&m([[1, 0], [1, 1]])), Scalar::from_int(2));
        assert_eq!(trace(&Mat2::zero()), Scalar::zero());
        assert_eq!(trace(&m([[1, 2], [3, 4]])), Scalar::from_int(5));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&m([[1, 0], [1, 1]])), Scalar::from_int(1));
        assert_eq!(det(&Mat2::identity()), Scalar::from_int(1));
        assert_eq!(det(&m([[1, 2], [3, 4]])), Scalar::from_int(-2));
    }

    #[test]
    fn mix_examples() {
        let a = m([[1, 2], [3, 4]]);
        assert_eq!(mix(&a, &a), a);
        assert_eq!(mix(&a, &m([[5, 6], [7, 8]])), m([[1, 6], [3, 8]]));
        assert_eq!(mix(&Mat2::zero(), &Mat2::identity()), m([[0, 0], [0, 1]]));
    }

    #[test]
    fn ddet_examples() {
        let t = m([[1, 0], [1, 1]]);
        assert_eq!(ddet(&t, &t), Scalar::from_int(2));
        assert_eq!(
            ddet(&m([[1, 2], [3, 4]]), &m([[5, 6], [7, 8]])),
            Scalar::from_int(-4)
        );
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9)
            .prop_map(|(a, b, c, d)| Scalar::gaussian(a, b, c, d))
    }

    fn arb_mat() -> impl Strategy<Value = Mat2> {
        proptest::array::uniform4(arb_scalar())
            .prop_map(|[a, b, c, d]| Mat2::new([[a, b], [c, d]]))
    }

    proptest! {
        #[test]
        fn ddet_symmetric(a in arb_mat(), b in arb_mat()) {
            prop_assert_eq!(ddet(&a, &b), ddet(&b, &a));
        }

        #[test]
        fn ddet_diagonal(a in arb_mat()) {
            prop_assert_eq!(ddet(&a, &a), &Scalar::from_int(2) * &det(&a));
        }

        #[test]
        fn ddet_additive_in_first_argument(a in arb_mat(), a2 in arb_mat(), b in arb_mat()) {
            prop_assert_eq!(ddet(&(&a + &a2), &b), ddet(&a, &b) + ddet(&a2, &b));
        }

        #[test]
        fn ddet_homogeneous(a in arb_mat(), b in arb_mat(), k in arb_scalar()) {
            prop_assert_eq!(ddet(&a.scale(&k), &b), &k * &ddet(&a, &b));
        }

        #[test]
        fn det_multiplicative(a in arb_mat(), b in arb_mat()) {
            prop_assert_eq!(det(&(&a * &b)), &det(&a) * &det(&b));
        }
    }
}
