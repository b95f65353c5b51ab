//! Root-of-unity difference `a_1 + a_2 θ + … + a_n θ^{n-1}`, with `θ` the
//! primitive root `exp(2πi/n)`.
//!
//! For `n = 2`, `θ = -1` and the value is `a_1 - a_2`. Because the powers of
//! a primitive root sum to zero, adding a constant to every input leaves the
//! value unchanged.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::scalar::{checked_complex, Complex};

/// Tolerance for `|θ^n - 1|` and for the vanishing root-power sum.
pub const ROOT_TOLERANCE: f64 = 1e-12;

/// Bound on the translation residual.
pub const TRANSLATION_TOLERANCE: f64 = 1e-10;

/// `θ^k` for `θ = exp(2πi/n)`. Quarter turns are returned exactly so that
/// `n = 2` and `n = 4` stay free of rounding.
pub fn root_power(n: usize, k: usize) -> Complex {
    let k = k % n;
    if k == 0 {
        return Complex::new(1.0, 0.0);
    }
    if 2 * k == n {
        return Complex::new(-1.0, 0.0);
    }
    if 4 * k == n {
        return Complex::new(0.0, 1.0);
    }
    if 4 * k == 3 * n {
        return Complex::new(0.0, -1.0);
    }
    Complex::from_polar(1.0, TAU * k as f64 / n as f64)
}

/// Whether `theta` is a primitive `n`-th root of unity within [`ROOT_TOLERANCE`].
pub fn is_primitive_root(theta: Complex, n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let one = Complex::new(1.0, 0.0);
    let close_to_one = |m: usize| (theta.powu(m as u32) - one).norm() <= ROOT_TOLERANCE;
    close_to_one(n) && (1..n).all(|m| !close_to_one(m))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaDifference {
    pub inputs: Vec<f64>,
    pub order: usize,
    pub theta: Complex,
    pub value: Complex,
}

pub fn theta_diff(inputs: &[f64]) -> Result<ThetaDifference> {
    let n = inputs.len();
    if n < 2 {
        return Err(Error::TooFewPoints {
            required: 2,
            found: n,
        });
    }
    for &a in inputs {
        checked_complex(a, 0.0)?;
    }
    let value = inputs
        .iter()
        .enumerate()
        .fold(Complex::new(0.0, 0.0), |acc, (k, &a)| {
            acc + root_power(n, k) * a
        });
    Ok(ThetaDifference {
        inputs: inputs.to_vec(),
        order: n,
        theta: root_power(n, 1),
        value,
    })
}

/// Outcome of evaluating both sides of an identity. Reported, not asserted.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionResidual {
    pub lhs: Complex,
    pub rhs: Complex,
    pub residual: Complex,
    pub claim: &'static str,
}

impl DecompositionResidual {
    fn new(lhs: Complex, rhs: Complex, claim: &'static str) -> Self {
        DecompositionResidual {
            lhs,
            rhs,
            residual: lhs - rhs,
            claim,
        }
    }

    pub fn magnitude(&self) -> f64 {
        self.residual.norm()
    }
}

pub const TRANSLATION_CLAIM: &str = "[a_1+t,...,a_n+t] = [a_1,...,a_n]";
pub const FIVE_VARIABLE_CLAIM: &str = "[a,b,c] = [a,d,f] + [d,a,f] + [d,f,c]";

/// Compares the difference of `inputs + t` against that of `inputs`.
pub fn theta_translation_check(inputs: &[f64], t: f64) -> Result<DecompositionResidual> {
    checked_complex(t, 0.0)?;
    let shifted: Vec<f64> = inputs.iter().map(|a| a + t).collect();
    let lhs = theta_diff(&shifted)?.value;
    let rhs = theta_diff(inputs)?.value;
    Ok(DecompositionResidual::new(lhs, rhs, TRANSLATION_CLAIM))
}

/// Evaluates both sides of `[a,b,c] = [a,d,f] + [d,a,f] + [d,f,c]`.
/// The residual is generally nonzero; callers decide what to do with it.
pub fn theta_claimed_decomposition_residual(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    f: f64,
) -> Result<DecompositionResidual> {
    let lhs = theta_diff(&[a, b, c])?.value;
    let rhs = theta_diff(&[a, d, f])?.value
        + theta_diff(&[d, a, f])?.value
        + theta_diff(&[d, f, c])?.value;
    Ok(DecompositionResidual::new(lhs, rhs, FIVE_VARIABLE_CLAIM))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_case_is_plain_subtraction() {
        let t = theta_diff(&[5.0, 3.0]).unwrap();
        assert_eq!(t.value, Complex::new(2.0, 0.0));
        assert_eq!(t.theta, Complex::new(-1.0, 0.0));
    }

    #[test]
    fn constants_and_unit_vector() {
        assert!(theta_diff(&[4.5, 4.5, 4.5]).unwrap().value.norm() <= ROOT_TOLERANCE);
        assert_eq!(
            theta_diff(&[1.0, 0.0, 0.0]).unwrap().value,
            Complex::new(1.0, 0.0)
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            theta_diff(&[1.0]),
            Err(Error::TooFewPoints {
                required: 2,
                found: 1
            })
        );
        assert!(theta_diff(&[1.0, f64::NAN]).is_err());
        assert!(theta_translation_check(&[1.0, 2.0], f64::INFINITY).is_err());
    }

    #[test]
    fn primitive_roots() {
        for n in 2..=12 {
            assert!(is_primitive_root(root_power(n, 1), n), "n = {n}");
        }
        // θ^2 for n = 4 is -1, a square root of unity only
        assert!(!is_primitive_root(root_power(4, 2), 4));
        assert!(!is_primitive_root(Complex::new(1.0, 0.0), 3));
    }

    #[test]
    fn translation_examples() {
        assert!(
            theta_translation_check(&[1.0, 2.0, 4.0], 10.0)
                .unwrap()
                .magnitude()
                <= TRANSLATION_TOLERANCE
        );
        assert_eq!(
            theta_translation_check(&[5.0, 3.0], -5.0)
                .unwrap()
                .magnitude(),
            0.0
        );
        assert!(
            theta_translation_check(&[0.0, 0.0, 0.0], 1.0)
                .unwrap()
                .magnitude()
                <= TRANSLATION_TOLERANCE
        );
    }

    #[test]
    fn five_variable_residuals() {
        assert_eq!(
            theta_claimed_decomposition_residual(0.0, 0.0, 0.0, 0.0, 0.0)
                .unwrap()
                .magnitude(),
            0.0
        );
        assert!(
            theta_claimed_decomposition_residual(1.0, 1.0, 1.0, 1.0, 1.0)
                .unwrap()
                .magnitude()
                <= 1e-12
        );
        // lhs 1 + 2θ + 3θ², rhs 1 + θ + 3θ², so the residual is θ itself
        let r = theta_claimed_decomposition_residual(1.0, 2.0, 3.0, 0.0, 0.0).unwrap();
        assert!((r.residual - root_power(3, 1)).norm() <= 1e-12);
        assert!((r.magnitude() - 1.0).abs() <= 1e-12);
    }
}
