//! Vandermonde matrices, three determinant algorithms and the
//! column-substitution bracket.
//!
//! The matrix of points `x_1 … x_n` has rows of increasing powers:
//! entry `(i, k)` is `x_k^i` for `i = 0 … n-1`. Its determinant is
//! `∏_{i>k} (x_i - x_k)`, which [`det_product`] evaluates directly.
//! [`det_laplace`] and [`det_fraction_free`] compute the same value from the
//! matrix entries and serve as independent checks.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;

/// Largest dimension accepted by [`det_laplace`].
pub const LAPLACE_MAX_DIM: usize = 8;

/// Non-empty ordered list of points. Duplicates are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointList<S> {
    points: Vec<S>,
}

impl<S: Scalar> PointList<S> {
    pub fn new(points: Vec<S>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPoints);
        }
        Ok(PointList { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for the `len`/`is_empty` pair.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn as_slice(&self) -> &[S] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.points.iter()
    }

    pub fn into_vec(self) -> Vec<S> {
        self.points
    }

    /// Copy with the point at `index` (0-based) replaced by `value`.
    pub fn with_replaced(&self, index: usize, value: S) -> Result<Self> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        let mut points = self.points.clone();
        points[index] = value;
        Ok(PointList { points })
    }

    /// Copy with every point shifted by `shift`.
    pub fn translated(&self, shift: &S) -> Self {
        PointList {
            points: self
                .points
                .iter()
                .map(|x| x.clone() + shift.clone())
                .collect(),
        }
    }

    /// Copy with the points at `a` and `b` exchanged.
    pub fn swapped(&self, a: usize, b: usize) -> Result<Self> {
        let len = self.len();
        for index in [a, b] {
            if index >= len {
                return Err(Error::IndexOutOfRange { index, len });
            }
        }
        let mut points = self.points.clone();
        points.swap(a, b);
        Ok(PointList { points })
    }

    /// Converts every point into another backend.
    pub fn map_backend<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PointList<T> {
        PointList {
            points: self.points.iter().map(f).collect(),
        }
    }
}

impl<S> Deref for PointList<S> {
    type Target = [S];
    fn deref(&self) -> &[S] {
        &self.points
    }
}

impl<S: Scalar> TryFrom<Vec<S>> for PointList<S> {
    type Error = Error;
    fn try_from(points: Vec<S>) -> Result<Self> {
        PointList::new(points)
    }
}

/// Vandermonde matrix of a point list; row `i` holds the `i`-th powers.
#[derive(Debug, Clone, PartialEq)]
pub struct VandermondeMatrix<S> {
    matrix: SquareMatrix<S>,
}

impl<S> VandermondeMatrix<S> {
    pub fn matrix(&self) -> &SquareMatrix<S> {
        &self.matrix
    }

    pub fn into_matrix(self) -> SquareMatrix<S> {
        self.matrix
    }
}

impl<S> Deref for VandermondeMatrix<S> {
    type Target = SquareMatrix<S>;
    fn deref(&self) -> &SquareMatrix<S> {
        &self.matrix
    }
}

pub fn build_matrix<S: Scalar>(pts: &PointList<S>) -> VandermondeMatrix<S> {
    let n = pts.len();
    let columns: Vec<Vec<S>> = pts
        .iter()
        .map(|x| {
            let mut powers = Vec::with_capacity(n);
            let mut acc = S::one();
            for _ in 0..n {
                powers.push(acc.clone());
                acc = acc * x.clone();
            }
            powers
        })
        .collect();
    VandermondeMatrix {
        matrix: SquareMatrix::from_fn(n, |i, k| columns[k][i].clone()),
    }
}

/// `∏_{i>k} (x_i - x_k)`; 1 for a single point.
pub fn det_product<S: Scalar>(pts: &PointList<S>) -> S {
    let p = pts.as_slice();
    S::product_of((1..p.len()).flat_map(|i| (0..i).map(move |k| p[i].clone() - p[k].clone())))
}

/// Cofactor expansion along the first row. Factorial cost, so limited to
/// [`LAPLACE_MAX_DIM`].
pub fn det_laplace<S: Scalar>(m: &SquareMatrix<S>) -> Result<S> {
    let n = m.dim();
    if n > LAPLACE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            max: LAPLACE_MAX_DIM,
        });
    }
    let columns: Vec<usize> = (0..n).collect();
    Ok(expand_minor(m, 0, &columns))
}

fn expand_minor<S: Scalar>(m: &SquareMatrix<S>, row: usize, columns: &[usize]) -> S {
    match columns.len() {
        0 => S::one(),
        1 => m.entry(row, columns[0]).clone(),
        _ => {
            let mut total = S::zero();
            let mut rest = Vec::with_capacity(columns.len() - 1);
            for (pos, &col) in columns.iter().enumerate() {
                let entry = m.entry(row, col);
                if entry.is_zero() {
                    continue;
                }
                rest.clear();
                rest.extend(
                    columns
                        .iter()
                        .enumerate()
                        .filter(|(p, _)| *p != pos)
                        .map(|(_, &c)| c),
                );
                let term = entry.clone() * expand_minor(m, row + 1, &rest);
                total = if pos % 2 == 0 {
                    total + term
                } else {
                    total - term
                };
            }
            total
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Works for any square
/// matrix, not only Vandermonde ones.
pub fn det_fraction_free<S: Scalar>(m: &SquareMatrix<S>) -> S {
    S::fraction_free_determinant(m)
}

/// Vandermonde determinant of a point list with one point replaced by a pivot.
#[derive(Debug, Clone, PartialEq)]
pub struct Bracket<S> {
    pub base: PointList<S>,
    /// 0-based position of the substituted point.
    pub index: usize,
    pub pivot: S,
    pub value: S,
}

pub fn bracket<S: Scalar>(pts: &PointList<S>, index: usize, pivot: &S) -> Result<Bracket<S>> {
    let substituted = pts.with_replaced(index, pivot.clone())?;
    Ok(Bracket {
        base: pts.clone(),
        index,
        pivot: pivot.clone(),
        value: det_product(&substituted),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn pts(values: &[i64]) -> PointList<Rational> {
        PointList::new(values.iter().map(|&v| Rational::from(v)).collect()).unwrap()
    }

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn build_matrix_examples() {
        assert_eq!(
            build_matrix(&pts(&[0, 1])).to_rows(),
            vec![vec![r(1), r(1)], vec![r(0), r(1)]]
        );
        assert_eq!(
            build_matrix(&pts(&[0, 1, 2])).to_rows(),
            vec![
                vec![r(1), r(1), r(1)],
                vec![r(0), r(1), r(2)],
                vec![r(0), r(1), r(4)]
            ]
        );
        assert_eq!(build_matrix(&pts(&[2])).to_rows(), vec![vec![r(1)]]);
    }

    #[test]
    fn empty_points_rejected() {
        assert_eq!(PointList::<Rational>::new(vec![]), Err(Error::EmptyPoints));
    }

    #[test]
    fn det_product_examples() {
        // (1-0)(2-0)(2-1)
        assert_eq!(det_product(&pts(&[0, 1, 2])), r(2));
        assert_eq!(det_product(&pts(&[4, 4, -9])), r(0));
        assert_eq!(det_product(&pts(&[0, 1])), r(1));
        assert_eq!(det_product(&pts(&[17])), r(1));
    }

    #[test]
    fn det_laplace_examples() {
        assert_eq!(det_laplace(&build_matrix(&pts(&[0, 1, 2]))).unwrap(), r(2));
        assert_eq!(det_laplace(&build_matrix(&pts(&[5]))).unwrap(), r(1));
        assert_eq!(det_laplace(&build_matrix(&pts(&[3, 3]))).unwrap(), r(0));
        let big = build_matrix(&pts(&[1, 2, 3, 4, 5, 6, 7, 8, 9]));
        assert_eq!(
            det_laplace(&big),
            Err(Error::DimensionTooLarge { n: 9, max: 8 })
        );
    }

    #[test]
    fn det_fraction_free_examples() {
        assert_eq!(det_fraction_free(&build_matrix(&pts(&[0, 1, 2]))), r(2));
        assert_eq!(det_fraction_free(&build_matrix(&pts(&[5]))), r(1));
        // 1*2*3 * 1*2 * 1
        assert_eq!(det_fraction_free(&build_matrix(&pts(&[1, 2, 3, 4]))), r(12));
    }

    #[test]
    fn determinants_with_fractional_points() {
        let p = PointList::new(
            ["1/2", "-2/3", "7/5", "0", "-11/4"]
                .iter()
                .map(|s| s.parse::<Rational>().unwrap())
                .collect(),
        )
        .unwrap();
        let m = build_matrix(&p);
        let v = det_product(&p);
        assert_eq!(det_laplace(&m).unwrap(), v);
        assert_eq!(det_fraction_free(&m), v);
    }

    #[test]
    fn bracket_examples() {
        // det_product([3,1,2]) = (1-3)(2-3)(2-1)
        assert_eq!(bracket(&pts(&[0, 1, 2]), 0, &r(3)).unwrap().value, r(2));
        assert_eq!(bracket(&pts(&[0, 1, 2]), 1, &r(2)).unwrap().value, r(0));
        assert_eq!(bracket(&pts(&[0, 1, 2]), 1, &r(1)).unwrap().value, r(2));
        assert_eq!(bracket(&pts(&[0, 1]), 0, &r(5)).unwrap().value, r(-4));
        let base = pts(&[0, 1, 2]);
        let b = bracket(&base, 2, &r(9)).unwrap();
        assert_eq!(b.base, base);
        assert_eq!(
            bracket(&base, 3, &r(1)),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        );
    }

    #[test]
    fn cyclic_form_matches_for_three_points() {
        let (a, b, c) = (r(3), r(-7), r(11));
        let cyclic = (a.clone() - b.clone()) * (b.clone() - c.clone()) * (c.clone() - a.clone());
        assert_eq!(det_product(&PointList::new(vec![a, b, c]).unwrap()), cyclic);
    }
}
