#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use recsys::{CoupledSystem, Mat2, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero(rng: &mut impl Rng) -> i64 {
    loop {
        let d = rng.gen_range(-9..=9);
        if d != 0 {
            return d;
        }
    }
}

/// Gaussian rational whose numerators and denominators lie in [-9, 9].
pub fn scalar(rng: &mut impl Rng) -> Scalar {
    let (a, c) = (rng.gen_range(-9..=9), rng.gen_range(-9..=9));
    let (b, d) = (nonzero(rng), nonzero(rng));
    Scalar::gaussian(a, b, c, d)
}

pub fn matrix(rng: &mut impl Rng) -> Mat2 {
    Mat2::new([[scalar(rng), scalar(rng)], [scalar(rng), scalar(rng)]])
}

pub fn system(rng: &mut impl Rng, s: usize) -> CoupledSystem {
    let matrices = (0..s).map(|_| matrix(rng)).collect();
    let a = (0..s).map(|_| scalar(rng)).collect();
    let b = (0..s).map(|_| scalar(rng)).collect();
    CoupledSystem::new(matrices, a, b).unwrap()
}

pub fn ints(v: &[Scalar]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x.to_integer().expect("integer")).unwrap())
        .collect()
}
