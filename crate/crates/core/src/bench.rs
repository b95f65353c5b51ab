//! Timing of the product formula against fraction-free elimination.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::sample::{random_float_points, random_points, rng_from_seed};
use crate::scalar::{Backend, Scalar};
use crate::vandermonde::{build_matrix, det_fraction_free, det_product, PointList};

pub const FLOAT_MAX_N: usize = 2000;
pub const EXACT_MAX_N: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub backend: Backend,
    pub repeats: usize,
    pub product_median_ms: f64,
    pub fraction_free_median_ms: f64,
}

/// Rejects sizes below 2 or above the backend's limit, and zero repeats.
pub fn check_bench_args(sizes: &[usize], repeats: usize, backend: Backend) -> Result<()> {
    if sizes.is_empty() {
        return Err(Error::InvalidArgument("no sizes given".into()));
    }
    if repeats == 0 {
        return Err(Error::InvalidArgument("repeats must be at least 1".into()));
    }
    let max = match backend {
        Backend::Exact => EXACT_MAX_N,
        Backend::Float => FLOAT_MAX_N,
    };
    for &n in sizes {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("size {n} is below 2")));
        }
        if n > max {
            return Err(Error::DimensionTooLarge { n, max });
        }
    }
    Ok(())
}

pub fn median_ms(samples: &mut [Duration]) -> f64 {
    samples.sort();
    let mid = samples.len() / 2;
    let d = if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    };
    d.as_secs_f64() * 1e3
}

fn time_sizes<S: Scalar>(
    sizes: &[usize],
    repeats: usize,
    mut draw: impl FnMut(usize) -> PointList<S>,
) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&n| {
            let mut product = Vec::with_capacity(repeats);
            let mut elimination = Vec::with_capacity(repeats);
            for _ in 0..repeats {
                let pts = draw(n);
                let start = Instant::now();
                std::hint::black_box(det_product(&pts));
                product.push(start.elapsed());

                let m = build_matrix(&pts);
                let start = Instant::now();
                std::hint::black_box(det_fraction_free(&m));
                elimination.push(start.elapsed());
            }
            BenchRow {
                n,
                backend: S::BACKEND,
                repeats,
                product_median_ms: median_ms(&mut product),
                fraction_free_median_ms: median_ms(&mut elimination),
            }
        })
        .collect()
}

/// Median timings per size. Exact inputs use the verification distribution
/// of random rationals; float inputs are uniform in `[-1, 1]`.
pub fn run_bench(
    sizes: &[usize],
    repeats: usize,
    backend: Backend,
    seed: u64,
) -> Result<Vec<BenchRow>> {
    check_bench_args(sizes, repeats, backend)?;
    let mut rng = rng_from_seed(seed);
    Ok(match backend {
        Backend::Exact => time_sizes(sizes, repeats, |n| random_points(&mut rng, n)),
        Backend::Float => time_sizes(sizes, repeats, |n| random_float_points(&mut rng, n)),
    })
}
