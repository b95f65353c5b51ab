//! Square matrices and fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense row-major square matrix.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S> SquareMatrix<S> {
    /// Builds a `dim x dim` matrix from `f(row, column)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for k in 0..dim {
                entries.push(f(i, k));
            }
        }
        SquareMatrix { dim, entries }
    }

    /// Returns `None` unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(SquareMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[S] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<S>>
    where
        S: Clone,
    {
        self.rows().map(|r| r.to_vec()).collect()
    }
}

impl<S: fmt::Debug> fmt::Debug for SquareMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Integral domain with exact division, as needed by Bareiss elimination.
pub(crate) trait BareissDomain: Clone + Zero + One + std::ops::Neg<Output = Self> {
    /// `(a * pivot - left * top) / prev`, where the division is exact.
    fn bareiss_update(a: &Self, pivot: &Self, left: &Self, top: &Self, prev: &Self) -> Self;

    /// Index (into `candidates`) of the pivot to use, or `None` if all vanish.
    fn select_pivot(candidates: &[&Self]) -> Option<usize>;
}

impl BareissDomain for BigInt {
    fn bareiss_update(a: &Self, pivot: &Self, left: &Self, top: &Self, prev: &Self) -> Self {
        let v = a * pivot - left * top;
        if prev.is_one() {
            v
        } else {
            debug_assert!((&v % prev).is_zero());
            v / prev
        }
    }

    /// Smallest nonzero candidate keeps intermediate products short.
    fn select_pivot(candidates: &[&Self]) -> Option<usize> {
        candidates
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .min_by_key(|(_, c)| c.abs())
            .map(|(i, _)| i)
    }
}

impl BareissDomain for f64 {
    fn bareiss_update(a: &Self, pivot: &Self, left: &Self, top: &Self, prev: &Self) -> Self {
        (a * pivot - left * top) / prev
    }

    fn select_pivot(candidates: &[&Self]) -> Option<usize> {
        let (idx, best) = candidates
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))?;
        (**best != 0.0).then_some(idx)
    }
}

/// Bareiss fraction-free determinant with row pivoting.
pub(crate) fn bareiss_determinant<T: BareissDomain>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let candidates: Vec<&T> = a[k..].iter().map(|row| &row[k]).collect();
        let Some(offset) = T::select_pivot(&candidates) else {
            return T::zero();
        };
        if offset != 0 {
            a.swap(k, k + offset);
            negate = !negate;
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            for j in k + 1..n {
                row[j] = T::bareiss_update(&row[j], &pivot_row[k], &row[k], &pivot_row[j], &prev);
            }
            row[k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss_small_integer_cases() {
        assert_eq!(
            bareiss_determinant(big(&[&[1, 2], &[3, 4]])),
            BigInt::from(-2)
        );
        assert_eq!(bareiss_determinant(big(&[&[7]])), BigInt::from(7));
        assert_eq!(bareiss_determinant::<BigInt>(vec![]), BigInt::one());
        // needs a row swap: leading zero
        assert_eq!(
            bareiss_determinant(big(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(
            bareiss_determinant(big(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])),
            BigInt::zero()
        );
    }

    #[test]
    fn bareiss_float() {
        let d = bareiss_determinant(vec![vec![2.0, 1.0], vec![1.0, 3.0]]);
        assert!((d - 5.0).abs() < 1e-12);
        assert_eq!(
            bareiss_determinant(vec![vec![0.0, 0.0], vec![1.0, 3.0]]),
            0.0
        );
    }

    #[test]
    fn matrix_shape() {
        let m = SquareMatrix::from_fn(3, |i, k| i * 10 + k);
        assert_eq!(*m.entry(2, 1), 21);
        assert_eq!(m.row(1), &[10, 11, 12]);
        assert_eq!(m.rows().count(), 3);
        assert!(SquareMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_none());
        assert_eq!(SquareMatrix::<i32>::from_fn(0, |_, _| 0).rows().count(), 0);
    }
}
