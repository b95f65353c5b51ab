//! Simple-fraction expansion of `1 / ∏ (x - x_i)`.
//!
//! With distinct roots the coefficient of `1 / (x - x_i)` is
//! `1 / ∏_{j≠i} (x_i - x_j)`. For three roots this is the familiar
//! quotient `(x_3 - x_2) / V` and its cyclic shifts.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vandermonde::PointList;

/// Dense univariate polynomial, coefficients in ascending degree.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| S::from_i64(i as i64) * c.clone())
                .collect(),
        )
    }

    /// `self * (x - root)`.
    pub fn mul_linear(&self, root: &S) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].clone() + c.clone();
            out[i] = out[i].clone() - c.clone() * root.clone();
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, factor: &S) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == S::one()
    }

    /// Float-tolerant variant of [`Polynomial::is_one`]: constant term near 1
    /// and all other coefficients near 0.
    pub fn approx_one(&self) -> bool {
        let one = S::one();
        let zero = S::zero();
        self.coeff(0).agrees_with(&one, &one)
            && self
                .coeffs
                .iter()
                .skip(1)
                .all(|c| c.agrees_with(&zero, &one))
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    /// Ascending-degree rendering such as `2 - 3*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `∏ (x - x_i)` kept together with its roots.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPolynomial<S> {
    pub roots: PointList<S>,
    pub poly: Polynomial<S>,
}

impl<S: Scalar> MonicPolynomial<S> {
    /// The non-leading coefficients `c_0 … c_{n-1}`.
    pub fn lower_coefficients(&self) -> &[S] {
        let c = self.poly.coeffs();
        &c[..c.len() - 1]
    }
}

/// Expands `∏ (x - x_i)`; the coefficient of `x^{n-j}` is `(-1)^j e_j`,
/// with `e_j` the elementary symmetric functions of the roots.
pub fn coefficients_from_roots<S: Scalar>(roots: &PointList<S>) -> MonicPolynomial<S> {
    let poly = roots
        .iter()
        .fold(Polynomial::constant(S::one()), |p, r| p.mul_linear(r));
    MonicPolynomial {
        roots: roots.clone(),
        poly,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartialFractionExpansion<S> {
    /// `(x_i, c_i)` pairs: `1 / ∏ (x - x_j) = Σ c_i / (x - x_i)`.
    pub terms: Vec<(S, S)>,
}

impl<S: Scalar> PartialFractionExpansion<S> {
    pub fn degree(&self) -> usize {
        self.terms.len()
    }

    pub fn roots(&self) -> impl Iterator<Item = &S> {
        self.terms.iter().map(|(r, _)| r)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &S> {
        self.terms.iter().map(|(_, c)| c)
    }

    pub fn coefficient_sum(&self) -> S {
        self.coefficients().fold(S::zero(), |a, c| a + c.clone())
    }

    /// `Σ c_i / (x - x_i)` at a point that is not a root.
    pub fn eval(&self, x: &S) -> Result<S> {
        self.terms.iter().try_fold(S::zero(), |acc, (r, c)| {
            Ok(acc + c.checked_div(&(x.clone() - r.clone()))?)
        })
    }
}

/// Coefficients `c_i = 1 / ∏_{j≠i} (x_i - x_j)`. Roots must be distinct.
pub fn expand_reciprocal<S: Scalar>(roots: &PointList<S>) -> Result<PartialFractionExpansion<S>> {
    let r = roots.as_slice();
    let mut terms = Vec::with_capacity(r.len());
    for (i, xi) in r.iter().enumerate() {
        let mut denom_factors = Vec::with_capacity(r.len().saturating_sub(1));
        for (j, xj) in r.iter().enumerate() {
            if j == i {
                continue;
            }
            let d = xi.clone() - xj.clone();
            if d.is_zero() {
                return Err(Error::DuplicateRoot {
                    first: i.min(j),
                    second: i.max(j),
                });
            }
            denom_factors.push(d);
        }
        let denom = S::product_of(denom_factors);
        terms.push((xi.clone(), S::one().checked_div(&denom)?));
    }
    Ok(PartialFractionExpansion { terms })
}

/// `Σ c_i ∏_{j≠i} (x - x_j)` in coefficient form. For a valid expansion this
/// is the constant polynomial 1.
pub fn recombine<S: Scalar>(exp: &PartialFractionExpansion<S>) -> Polynomial<S> {
    let roots: Vec<&S> = exp.roots().collect();
    exp.terms
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (i, (_, c))| {
            let others = roots
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(Polynomial::constant(S::one()), |p, (_, r)| p.mul_linear(r));
            acc.add(&others.scale(c))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn pts(values: &[&str]) -> PointList<Rational> {
        PointList::new(values.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    fn qs(values: &[&str]) -> Vec<Rational> {
        values.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn expand_examples() {
        let e = expand_reciprocal(&pts(&["0", "1"])).unwrap();
        assert_eq!(
            e.coefficients().cloned().collect::<Vec<_>>(),
            qs(&["-1", "1"])
        );
        let e = expand_reciprocal(&pts(&["0", "1", "2"])).unwrap();
        assert_eq!(
            e.coefficients().cloned().collect::<Vec<_>>(),
            qs(&["1/2", "-1", "1/2"])
        );
        let e = expand_reciprocal(&pts(&["5"])).unwrap();
        assert_eq!(e.coefficients().cloned().collect::<Vec<_>>(), qs(&["1"]));
    }

    #[test]
    fn duplicate_roots_rejected() {
        assert_eq!(
            expand_reciprocal(&pts(&["1", "2", "1/1"])),
            Err(Error::DuplicateRoot {
                first: 0,
                second: 2
            })
        );
    }

    #[test]
    fn recombine_examples() {
        for roots in [vec!["0", "1"], vec!["0", "1", "2"], vec!["5"]] {
            let p = recombine(&expand_reciprocal(&pts(&roots)).unwrap());
            assert!(p.is_one(), "{roots:?} gave {p}");
        }
    }

    #[test]
    fn coefficients_examples() {
        assert_eq!(
            coefficients_from_roots(&pts(&["1", "2"])).poly.coeffs(),
            qs(&["2", "-3", "1"])
        );
        assert_eq!(
            coefficients_from_roots(&pts(&["0", "1", "2"]))
                .poly
                .coeffs(),
            qs(&["0", "2", "-3", "1"])
        );
        let m = coefficients_from_roots(&pts(&["-7/3"]));
        assert_eq!(m.poly.coeffs(), qs(&["7/3", "1"]));
        assert_eq!(m.lower_coefficients(), qs(&["7/3"]));
    }

    #[test]
    fn polynomial_helpers() {
        let p = Polynomial::new(qs(&["1", "2", "3", "0", "0"]));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&"2".parse().unwrap()), "17".parse().unwrap());
        assert_eq!(p.derivative().coeffs(), qs(&["2", "6"]));
        assert_eq!(Polynomial::<Rational>::zero().degree(), None);
        assert_eq!(
            Polynomial::new(qs(&["2", "-3", "1"])).to_string(),
            "2 + (-3)*x + (1)*x^2"
        );
    }

    #[test]
    fn pointwise_evaluation() {
        let roots = pts(&["0", "1", "2"]);
        let e = expand_reciprocal(&roots).unwrap();
        let x: Rational = "7/2".parse().unwrap();
        let p = coefficients_from_roots(&roots).poly;
        assert_eq!(e.eval(&x).unwrap(), p.eval(&x).recip().unwrap());
        assert!(e.eval(&"1".parse().unwrap()).is_err());
    }
}
