//! Seeded random inputs for the randomized checks and benchmarks.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::{Float64, Rational};
use crate::vandermonde::PointList;

pub const NUMERATOR_BOUND: i64 = 1_000_000;
pub const DENOMINATOR_MAX: i64 = 1_000;

/// Deterministic generator for a seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `[-10^6, 10^6]`, denominator in `[1, 10^3]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let numer = rng.gen_range(-NUMERATOR_BOUND..=NUMERATOR_BOUND);
    let denom = rng.gen_range(1..=DENOMINATOR_MAX);
    Rational::new(numer, denom).expect("positive denominator")
}

pub fn random_points<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PointList<Rational> {
    PointList::new((0..n).map(|_| random_rational(rng)).collect()).expect("n >= 1")
}

/// Like [`random_points`] but redraws until all points differ.
pub fn random_distinct_points<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PointList<Rational> {
    let mut points: Vec<Rational> = Vec::with_capacity(n);
    while points.len() < n {
        let candidate = random_rational(rng);
        if !points.contains(&candidate) {
            points.push(candidate);
        }
    }
    PointList::new(points).expect("n >= 1")
}

/// Copies one point over another so the list has a repeated value.
pub fn force_duplicate<R: Rng + ?Sized>(
    rng: &mut R,
    pts: &PointList<Rational>,
) -> PointList<Rational> {
    let n = pts.len();
    if n < 2 {
        return pts.clone();
    }
    let src = rng.gen_range(0..n);
    let mut dst = rng.gen_range(0..n - 1);
    if dst >= src {
        dst += 1;
    }
    pts.with_replaced(dst, pts[src].clone())
        .expect("index in range")
}

/// Integers in `[-bound, bound]` as exact rationals.
pub fn random_integer_points<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    bound: i64,
) -> PointList<Rational> {
    PointList::new(
        (0..n)
            .map(|_| Rational::from(rng.gen_range(-bound..=bound)))
            .collect(),
    )
    .expect("n >= 1")
}

/// Uniform doubles in `[-1, 1]`.
pub fn random_float_points<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PointList<Float64> {
    PointList::new(
        (0..n)
            .map(|_| Float64::new(rng.gen_range(-1.0..=1.0)).expect("finite"))
            .collect(),
    )
    .expect("n >= 1")
}

/// Random rational that differs from every point in `pts`.
pub fn random_non_root<R: Rng + ?Sized>(rng: &mut R, pts: &PointList<Rational>) -> Rational {
    loop {
        let x = random_rational(rng);
        if pts.iter().all(|p| !(p.clone() - x.clone()).is_zero()) {
            return x;
        }
    }
}
