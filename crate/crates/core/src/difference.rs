//! The n-ary difference and its pivot decomposition.
//!
//! The difference of `n` quantities is their Vandermonde determinant `V`.
//! For any pivot `x`, replacing each point in turn by `x` and summing the
//! resulting determinants gives `V` back, just as `b - a = (b - x) + (x - a)`
//! for two quantities. The doubled matrix with entries `x_k^i + x^i` has
//! determinant `2V` for every pivot; [`doubled_determinant`] evaluates it
//! by elimination so the relation can be checked directly.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;
use crate::vandermonde::{bracket, det_fraction_free, det_product, Bracket, PointList};

fn require_at_least_two<S: Scalar>(pts: &PointList<S>) -> Result<()> {
    if pts.len() < 2 {
        return Err(Error::TooFewPoints {
            required: 2,
            found: pts.len(),
        });
    }
    Ok(())
}

/// Signed difference of `n >= 2` quantities: `∏_{i>k} (x_i - x_k)`.
/// For two points this is `x_2 - x_1`.
pub fn difference_nary<S: Scalar>(pts: &PointList<S>) -> Result<S> {
    require_at_least_two(pts)?;
    Ok(det_product(pts))
}

/// Substitution terms of the difference around one pivot.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<S> {
    pub base: PointList<S>,
    pub pivot: S,
    /// `terms[k]` replaces point `k` by the pivot.
    pub terms: Vec<Bracket<S>>,
    pub total: S,
    /// Difference of the unmodified points.
    pub reference: S,
}

impl<S: Scalar> Decomposition<S> {
    pub fn term_values(&self) -> impl Iterator<Item = &S> {
        self.terms.iter().map(|b| &b.value)
    }

    /// Whether the summed terms reproduce the reference difference.
    pub fn holds(&self) -> bool {
        let scale = self.term_values().fold(S::zero(), |acc, t| acc + t.abs());
        self.total.agrees_with(&self.reference, &scale)
    }
}

/// Splits the difference of `pts` into `n` bracket terms around `pivot`.
/// Each term is evaluated on its own; the pivot may coincide with a point.
pub fn decompose<S: Scalar>(pts: &PointList<S>, pivot: &S) -> Result<Decomposition<S>> {
    require_at_least_two(pts)?;
    let terms = (0..pts.len())
        .map(|k| bracket(pts, k, pivot))
        .collect::<Result<Vec<_>>>()?;
    let total = terms.iter().fold(S::zero(), |acc, t| acc + t.value.clone());
    Ok(Decomposition {
        base: pts.clone(),
        pivot: pivot.clone(),
        terms,
        total,
        reference: det_product(pts),
    })
}

/// The `n x n` matrix with entries `x_k^i + pivot^i`.
pub fn doubled_matrix<S: Scalar>(pts: &PointList<S>, pivot: &S) -> SquareMatrix<S> {
    let n = pts.len();
    let pivot_powers: Vec<S> = (0..n).map(|i| pivot.pow(i)).collect();
    let point_powers: Vec<Vec<S>> = pts
        .iter()
        .map(|x| (0..n).map(|i| x.pow(i)).collect())
        .collect();
    SquareMatrix::from_fn(n, |i, k| {
        point_powers[k][i].clone() + pivot_powers[i].clone()
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DoubledMatrixReport<S> {
    pub base: PointList<S>,
    pub pivot: S,
    pub det_doubled: S,
    /// Twice the difference of `base`.
    pub expected: S,
}

impl<S: Scalar> DoubledMatrixReport<S> {
    pub fn holds(&self) -> bool {
        self.det_doubled.agrees_with(&self.expected, &self.expected)
    }
}

pub fn doubled_determinant<S: Scalar>(
    pts: &PointList<S>,
    pivot: &S,
) -> Result<DoubledMatrixReport<S>> {
    require_at_least_two(pts)?;
    let det_doubled = det_fraction_free(&doubled_matrix(pts, pivot));
    let v = det_product(pts);
    Ok(DoubledMatrixReport {
        base: pts.clone(),
        pivot: pivot.clone(),
        det_doubled,
        expected: v.clone() + v,
    })
}

/// Separation of points given by their distances from a common origin.
/// Moving the origin shifts every distance equally and leaves this unchanged;
/// the absolute value makes it independent of the point order.
pub fn distance_nary<S: Scalar>(origin_distances: &PointList<S>) -> Result<S> {
    Ok(difference_nary(origin_distances)?.abs())
}
