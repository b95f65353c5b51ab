//! Seeded randomized checks of the exact identities.
//!
//! The operations under test are passed in through [`Kernels`], so a broken
//! implementation can be substituted to confirm the checks catch it.

use std::fmt;

use crate::difference::{difference_nary, doubled_matrix};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::partial_fractions::{expand_reciprocal, recombine, PartialFractionExpansion};
use crate::sample::{
    force_duplicate, random_distinct_points, random_points, random_rational, rng_from_seed,
};
use crate::scalar::Rational;
use crate::vandermonde::{
    bracket, build_matrix, det_fraction_free, det_laplace, det_product, PointList,
};

pub const MIN_N: usize = 2;
pub const MAX_N: usize = 8;
/// Largest size on which the cofactor expansion takes part in the oracle check.
pub const LAPLACE_CHECK_MAX_N: usize = 6;

pub const CHECK_DECOMPOSITION: &str = "decomposition";
pub const CHECK_DOUBLED: &str = "doubled_determinant";
pub const CHECK_RECOMBINATION: &str = "partial_fraction_recombination";
pub const CHECK_ORACLES: &str = "determinant_oracle_agreement";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub cases: usize,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if !(MIN_N..=MAX_N).contains(&self.n_max) {
            return Err(Error::InvalidArgument(format!(
                "n-max must be in {MIN_N}..={MAX_N}, got {}",
                self.n_max
            )));
        }
        if self.cases == 0 {
            return Err(Error::InvalidArgument("cases must be at least 1".into()));
        }
        Ok(())
    }
}

type Points = PointList<Rational>;

/// The operations exercised by [`run_checks`].
#[derive(Clone, Copy)]
pub struct Kernels {
    pub difference: fn(&Points) -> Result<Rational>,
    pub bracket: fn(&Points, usize, &Rational) -> Result<Rational>,
    /// Determinant of the doubled matrix.
    pub doubled: fn(&Points, &Rational) -> Result<Rational>,
    pub expand: fn(&Points) -> Result<PartialFractionExpansion<Rational>>,
    pub det_product: fn(&Points) -> Rational,
    pub det_laplace: fn(&SquareMatrix<Rational>) -> Result<Rational>,
    pub det_fraction_free: fn(&SquareMatrix<Rational>) -> Rational,
}

impl Default for Kernels {
    fn default() -> Self {
        Kernels {
            difference: difference_nary,
            bracket: |p, k, x| bracket(p, k, x).map(|b| b.value),
            doubled: |p, x| Ok(det_fraction_free(&doubled_matrix(p, x))),
            expand: expand_reciprocal,
            det_product,
            det_laplace,
            det_fraction_free,
        }
    }
}

/// First failing input of a check.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub case: usize,
    pub points: Vec<Rational>,
    pub pivot: Option<Rational>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "case {} points [{}]", self.case, pts.join(","))?;
        if let Some(pivot) = &self.pivot {
            write!(f, " pivot {pivot}")?;
        }
        write!(f, ": lhs {} != rhs {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckSummary {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<Counterexample>,
}

impl CheckSummary {
    fn new(name: &'static str) -> Self {
        CheckSummary {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, outcome: Outcome, case: usize, points: &Points, pivot: Option<&Rational>) {
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail { lhs, rhs } => {
                self.failed += 1;
                if self.first_failure.is_none() {
                    self.first_failure = Some(Counterexample {
                        case,
                        points: points.to_vec(),
                        pivot: pivot.cloned(),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckSummary>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckSummary::holds)
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

enum Outcome {
    Pass,
    Fail { lhs: String, rhs: String },
}

fn compare(lhs: Result<Rational>, rhs: Result<Rational>) -> Outcome {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => Outcome::Pass,
        (l, r) => Outcome::Fail {
            lhs: render(&l),
            rhs: render(&r),
        },
    }
}

fn render(value: &Result<Rational>) -> String {
    match value {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn decomposition_outcome(k: &Kernels, pts: &Points, pivot: &Rational) -> Outcome {
    let total = (0..pts.len()).try_fold(Rational::from(0), |acc, i| {
        Ok(acc + (k.bracket)(pts, i, pivot)?)
    });
    compare(total, (k.difference)(pts))
}

fn doubled_outcome(k: &Kernels, pts: &Points, pivot: &Rational) -> Outcome {
    let twice = (k.difference)(pts).map(|v| v.clone() + v);
    compare((k.doubled)(pts, pivot), twice)
}

fn recombination_outcome(k: &Kernels, roots: &Points) -> Outcome {
    match (k.expand)(roots) {
        Ok(exp) => {
            let poly = recombine(&exp);
            if poly.is_one() {
                Outcome::Pass
            } else {
                Outcome::Fail {
                    lhs: poly.to_string(),
                    rhs: "1".into(),
                }
            }
        }
        Err(e) => Outcome::Fail {
            lhs: format!("error: {e}"),
            rhs: "1".into(),
        },
    }
}

fn oracle_outcome(k: &Kernels, pts: &Points) -> Outcome {
    let product = (k.det_product)(pts);
    let m = build_matrix(pts);
    if pts.len() <= LAPLACE_CHECK_MAX_N {
        if let Outcome::Fail { lhs, rhs } = compare(Ok(product.clone()), (k.det_laplace)(&m)) {
            return Outcome::Fail {
                lhs,
                rhs: format!("laplace {rhs}"),
            };
        }
    }
    match compare(Ok(product), Ok((k.det_fraction_free)(&m))) {
        Outcome::Fail { lhs, rhs } => Outcome::Fail {
            lhs,
            rhs: format!("fraction-free {rhs}"),
        },
        pass => pass,
    }
}

/// Runs every check for `n` in `2..=n_max`, `cases` random inputs per size.
/// Sizes are visited in increasing order, so the first recorded failure of a
/// check is also one of the smallest.
pub fn run_checks(config: &VerifyConfig, kernels: &Kernels) -> Result<VerifyReport> {
    config.validate()?;
    let mut rng = rng_from_seed(config.seed);
    let mut decomposition = CheckSummary::new(CHECK_DECOMPOSITION);
    let mut doubled = CheckSummary::new(CHECK_DOUBLED);
    let mut recombination = CheckSummary::new(CHECK_RECOMBINATION);
    let mut oracles = CheckSummary::new(CHECK_ORACLES);

    let mut case = 0;
    for n in MIN_N..=config.n_max {
        for i in 0..config.cases {
            let pts = random_points(&mut rng, n);
            let pivot = random_rational(&mut rng);
            decomposition.record(
                decomposition_outcome(kernels, &pts, &pivot),
                case,
                &pts,
                Some(&pivot),
            );
            doubled.record(
                doubled_outcome(kernels, &pts, &pivot),
                case,
                &pts,
                Some(&pivot),
            );

            let roots = random_distinct_points(&mut rng, n);
            recombination.record(recombination_outcome(kernels, &roots), case, &roots, None);

            // every fourth case repeats a point so the oracles must all give 0
            let oracle_pts = if i % 4 == 3 {
                force_duplicate(&mut rng, &pts)
            } else {
                pts
            };
            oracles.record(
                oracle_outcome(kernels, &oracle_pts),
                case,
                &oracle_pts,
                None,
            );
            case += 1;
        }
    }

    Ok(VerifyReport {
        config: *config,
        checks: vec![decomposition, doubled, recombination, oracles],
    })
}
