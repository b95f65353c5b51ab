//! Exact n-ary differences built from Vandermonde determinants.
//!
//! The difference of `n` quantities `x_1 … x_n` is their Vandermonde
//! determinant `V = ∏_{i>k} (x_i - x_k)`. Like the ordinary difference it
//! splits around any extra point `x`: replacing each `x_k` by `x` in turn
//! and summing the determinants gives back `V`.
//!
//! ```
//! use narydiff::{decompose, PointList, Rational};
//!
//! let pts = PointList::new(vec![Rational::from(0), Rational::from(1), Rational::from(2)]).unwrap();
//! let d = decompose(&pts, &Rational::from(3)).unwrap();
//! assert_eq!(d.total, Rational::from(2));
//! assert_eq!(d.total, d.reference);
//! ```

pub mod bench;
pub mod difference;
pub mod error;
pub mod matrix;
pub mod partial_fractions;
pub mod sample;
pub mod scalar;
pub mod theta;
pub mod vandermonde;
pub mod verify;

pub use difference::{
    decompose, difference_nary, distance_nary, doubled_determinant, doubled_matrix, Decomposition,
    DoubledMatrixReport,
};
pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use partial_fractions::{
    coefficients_from_roots, expand_reciprocal, recombine, MonicPolynomial,
    PartialFractionExpansion, Polynomial,
};
pub use scalar::{Backend, Complex, Float64, Rational, Scalar};
pub use theta::{
    theta_claimed_decomposition_residual, theta_diff, theta_translation_check,
    DecompositionResidual, ThetaDifference,
};
pub use vandermonde::{
    bracket, build_matrix, det_fraction_free, det_laplace, det_product, Bracket, PointList,
    VandermondeMatrix,
};
