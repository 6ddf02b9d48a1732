//! Tilings of a `1 × n` board by black and white pieces of length `1…k`
//! in which no black piece follows a white one.
//!
//! Such a tiling is a run of black pieces followed by a run of white ones.
//! Let `aₙ` count tilings that end black (including the empty tiling, so
//! `a₀ = 1`) and `bₙ` those that end white (`b₀ = 0`). Splitting off the
//! last piece of length `j` gives
//!
//! ```text
//! aₙ = Σⱼ aₙ₋ⱼ,    bₙ = Σⱼ (aₙ₋ⱼ + bₙ₋ⱼ),    j = 1…k,
//! ```
//!
//! a coupled system of order `k` with every `Aⱼ = [[1,0],[1,1]]`, so the
//! `aₙ` are the k-bonacci numbers. The pieces are called "dominoes" in some
//! write-ups even though their lengths vary.
//!
//! The order-`k` recurrence for `k = 3` has a zero `zₙ₋₃` coefficient; the
//! recurrence still has order 6.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Mat2, Scalar};
use crate::decouple::{coefficients_recursive, CoefficientVector, CoupledSystem};
use crate::error::{Error, Result};
use crate::sequence::generate_coupled;

/// Maximal piece length `k ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TilingParams {
    k: usize,
}

impl TilingParams {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::PieceSize(k));
        }
        Ok(TilingParams { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// One tiling: piece lengths left to right, black up to `white_start`,
/// white from there on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    pub parts: Vec<usize>,
    pub white_start: usize,
}

impl Tiling {
    pub fn len(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// No white pieces (the empty tiling counts as all-black).
    pub fn is_all_black(&self) -> bool {
        self.white_start == self.parts.len()
    }

    /// Parts in `1..=k` and a split index within the parts.
    pub fn is_valid(&self, k: usize) -> bool {
        self.white_start <= self.parts.len() && self.parts.iter().all(|&p| (1..=k).contains(&p))
    }

    /// `B`/`W` per cell, e.g. `BBWWW` for parts `[2, 1, 2]` split at 1.
    pub fn render(&self) -> String {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| {
                let c = if i < self.white_start { 'B' } else { 'W' };
                std::iter::repeat_n(c, p)
            })
            .collect()
    }
}

/// `a`, `b`, `t` for board lengths `0…n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingCounts {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
    pub t: Vec<BigInt>,
}

fn piece_matrix() -> Mat2 {
    Mat2::from_ints([[1, 0], [1, 1]])
}

/// First `k` counts from `a₀ = 1`, `b₀ = 0` using only the pieces that fit.
fn initial_counts(k: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut a = vec![BigInt::one()];
    let mut b = vec![BigInt::zero()];
    for m in 1..k {
        let am = (1..=m).map(|j| &a[m - j]).sum();
        let bm = (1..=m).map(|j| &a[m - j] + &b[m - j]).sum();
        a.push(am);
        b.push(bm);
    }
    (a, b)
}

/// The coupled system of order `k` counting the tilings.
pub fn tiling_system(k: usize) -> Result<CoupledSystem> {
    let k = TilingParams::new(k)?.k();
    let (a, b) = initial_counts(k);
    CoupledSystem::new(
        vec![piece_matrix(); k],
        a.into_iter().map(Scalar::from).collect(),
        b.into_iter().map(Scalar::from).collect(),
    )
}

fn as_integer(x: &Scalar) -> BigInt {
    x.to_integer().expect("tiling counts are integers")
}

/// Counts for board lengths `0…n` via the coupled system.
pub fn tiling_counts(k: usize, n: usize) -> Result<TilingCounts> {
    let sys = tiling_system(k)?;
    let horizon = n.max(sys.order() - 1);
    let pair = generate_coupled(&sys, horizon)?;
    let t = pair.sum();
    let take = |v: &[Scalar]| v[..=n].iter().map(as_integer).collect::<Vec<_>>();
    Ok(TilingCounts {
        a: take(&pair.a),
        b: take(&pair.b),
        t: take(&t),
    })
}

/// Counts for the degenerate `k = 0`: only the empty board can be tiled,
/// so `a = (1, 0, 0, …)`, `b = 0` and `t = (1, 0, 0, …)`.
pub fn tiling_counts_no_pieces(n: usize) -> TilingCounts {
    let indicator = |m: usize| if m == 0 { BigInt::one() } else { BigInt::zero() };
    TilingCounts {
        a: (0..=n).map(indicator).collect(),
        b: vec![BigInt::zero(); n + 1],
        t: (0..=n).map(indicator).collect(),
    }
}

/// Every composition of `n` into parts `1…k`, in lexicographic order.
pub fn compositions(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in 1..=k.min(rest) {
            prefix.push(p);
            go(k, rest - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, &mut Vec::new(), &mut out);
    out
}

/// All valid tilings of a board of length `n` by brute force.
pub fn enumerate_tilings(k: usize, n: usize) -> Result<Vec<Tiling>> {
    let k = TilingParams::new(k)?.k();
    Ok(compositions(k, n)
        .into_iter()
        .flat_map(|parts| {
            (0..=parts.len()).map(move |white_start| Tiling {
                parts: parts.clone(),
                white_start,
            })
        })
        .collect())
}

/// Rows `1…max_k` of the coefficient triangle: row `k` is the decoupled
/// recurrence of [`tiling_system`]`(k)`.
pub fn coefficient_triangle(max_k: usize) -> Vec<CoefficientVector> {
    (1..=max_k)
        .map(|k| coefficients_recursive(&vec![piece_matrix(); k]).expect("k >= 1"))
        .collect()
}

/// The vector added to the zero-padded row `k − 1` to obtain row `k`:
/// `2` at position `k`, `−2` at positions `k+1 … 2k−1`, `−1` at `2k`.
pub fn triangle_row_increment(k: usize) -> CoefficientVector {
    let mut v = vec![0i64; 2 * k];
    if k == 0 {
        return CoefficientVector::default();
    }
    v[k - 1] = 2;
    for x in &mut v[k..2 * k - 1] {
        *x = -2;
    }
    v[2 * k - 1] = -1;
    CoefficientVector::from_ints(&v)
}
