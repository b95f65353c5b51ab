//! Scalar backends.
//!
//! Every identity in this crate is stated over a [`Scalar`]. Two backends are
//! provided: [`Rational`], an arbitrary-precision exact fraction kept in
//! lowest terms, and [`Float64`], an IEEE double used for benchmarking and
//! for cross-checking the exact results.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{bareiss_determinant, SquareMatrix};

/// Complex numbers used by the root-of-unity difference.
pub type Complex = Complex64;

/// Relative tolerance used when a float result is compared against the same
/// quantity computed another way.
pub const FLOAT_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Which arithmetic a [`Scalar`] implementation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Field element usable by the determinant and difference operations.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn from_i64(value: i64) -> Self;

    /// Converts an exact rational into this backend (rounding for floats).
    fn from_rational(value: &Rational) -> Self;

    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    fn abs(&self) -> Self;

    fn to_f64(&self) -> f64;

    fn pow(&self, exp: usize) -> Self {
        let mut base = self.clone();
        let mut exp = exp;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Product of a sequence of factors.
    fn product_of<I: IntoIterator<Item = Self>>(factors: I) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc * f)
    }

    /// Determinant by fraction-free elimination.
    fn fraction_free_determinant(matrix: &SquareMatrix<Self>) -> Self;

    /// Whether two values describe the same quantity. Exact backends compare
    /// for equality; float backends allow a relative error measured against
    /// `scale` (and against the magnitudes of the two operands).
    fn agrees_with(&self, other: &Self, scale: &Self) -> bool;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Arbitrary-precision fraction, always stored with a positive denominator
/// and coprime numerator and denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Nearest double (may overflow to infinity for huge values).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // num-rational gives up when numerator and denominator both
            // overflow f64; fall back to a ratio of shifted integers.
            let shift = self
                .numer()
                .bits()
                .max(self.denom().bits())
                .saturating_sub(1000);
            let n = (self.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (self.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(value: f64) -> Result<Rational> {
        BigRational::from_float(value)
            .map(Rational)
            .ok_or_else(|| Error::NonFinite(value.to_string()))
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl fmt::Display for Rational {
    /// `p` for integers, `p/q` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

fn parse_digits(text: &str, original: &str) -> Result<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            input: original.to_string(),
            reason: "expected decimal digits",
        });
    }
    Ok(BigInt::parse_bytes(text.as_bytes(), 10).expect("validated digits"))
}

fn parse_signed(text: &str, original: &str) -> Result<(bool, BigInt)> {
    let (negative, digits) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    Ok((negative, parse_digits(digits, original)?))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `7`, `-3/6` and finite decimals such as `-0.25`. Decimals are
    /// converted exactly.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty input",
            });
        }
        if let Some((num, den)) = text.split_once('/') {
            let (negative, numer) = parse_signed(num.trim(), s)?;
            let denom = parse_digits(den.trim(), s)?;
            let numer = if negative { -numer } else { numer };
            return Rational::new(numer, denom);
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            let (negative, digits) = match int_part.as_bytes().first() {
                Some(b'-') => (true, &int_part[1..]),
                Some(b'+') => (false, &int_part[1..]),
                _ => (false, int_part),
            };
            if digits.is_empty() && frac_part.is_empty() {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "decimal point without digits",
                });
            }
            let whole = if digits.is_empty() {
                BigInt::zero()
            } else {
                parse_digits(digits, s)?
            };
            let frac = if frac_part.is_empty() {
                BigInt::zero()
            } else {
                parse_digits(frac_part, s)?
            };
            let scale = num_traits::pow(BigInt::from(10u8), frac_part.len());
            let numer = whole * &scale + frac;
            let numer = if negative { -numer } else { numer };
            return Rational::new(numer, scale);
        }
        let (negative, value) = parse_signed(text, s)?;
        Ok(Rational::from_integer(if negative {
            -value
        } else {
            value
        }))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;

    /// Panics on a zero divisor; use [`Rational::checked_div`] for fallible division.
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        Rational::product_of(iter)
    }
}

impl Scalar for Rational {
    const BACKEND: Backend = Backend::Exact;

    fn from_i64(value: i64) -> Self {
        Rational::from_integer(value)
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Rational::checked_div(self, rhs)
    }

    fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }

    /// Multiplies numerators and denominators separately and reduces once.
    fn product_of<I: IntoIterator<Item = Self>>(factors: I) -> Self {
        let mut numer = BigInt::one();
        let mut denom = BigInt::one();
        for f in factors {
            if f.is_zero() {
                return Rational::zero();
            }
            numer *= f.numer();
            denom *= f.denom();
        }
        Rational(BigRational::new(numer, denom))
    }

    /// Scales each column by the lcm of its denominators and runs integer
    /// Bareiss elimination, so every intermediate division is exact.
    fn fraction_free_determinant(matrix: &SquareMatrix<Self>) -> Self {
        let n = matrix.dim();
        let mut scales = Vec::with_capacity(n);
        let mut ints: Vec<Vec<BigInt>> = vec![Vec::with_capacity(n); n];
        for k in 0..n {
            let lcm = (0..n).fold(BigInt::one(), |acc, i| acc.lcm(matrix.entry(i, k).denom()));
            for (i, row) in ints.iter_mut().enumerate() {
                let e = matrix.entry(i, k);
                row.push(e.numer() * (&lcm / e.denom()));
            }
            scales.push(lcm);
        }
        let det = bareiss_determinant(ints);
        let scale = scales.into_iter().fold(BigInt::one(), |acc, s| acc * s);
        Rational(BigRational::new(det, scale))
    }

    fn agrees_with(&self, other: &Self, _scale: &Self) -> bool {
        self == other
    }
}

// ---------------------------------------------------------------------------
// Float64
// ---------------------------------------------------------------------------

/// IEEE double. Finite on construction; arithmetic results are unchecked.
#[derive(Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Float64(f64);

impl Float64 {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Float64(value))
        } else {
            Err(Error::NonFinite(value.to_string()))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Float64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Float64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl FromStr for Float64 {
    type Err = Error;

    /// Parses through the exact rational reader, then rounds once.
    fn from_str(s: &str) -> Result<Self> {
        let r: Rational = s.parse()?;
        Float64::new(r.to_f64())
    }
}

macro_rules! float_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Float64 {
            type Output = Float64;
            fn $method(self, rhs: Float64) -> Float64 {
                Float64(self.0 $op rhs.0)
            }
        }
    };
}

float_binop!(Add, add, +);
float_binop!(Sub, sub, -);
float_binop!(Mul, mul, *);
float_binop!(Div, div, /);

impl Neg for Float64 {
    type Output = Float64;
    fn neg(self) -> Float64 {
        Float64(-self.0)
    }
}

impl Zero for Float64 {
    fn zero() -> Self {
        Float64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
}

impl One for Float64 {
    fn one() -> Self {
        Float64(1.0)
    }
}

impl Sum for Float64 {
    fn sum<I: Iterator<Item = Float64>>(iter: I) -> Float64 {
        Float64(iter.map(|f| f.0).sum())
    }
}

impl Scalar for Float64 {
    const BACKEND: Backend = Backend::Float;

    fn from_i64(value: i64) -> Self {
        Float64(value as f64)
    }

    fn from_rational(value: &Rational) -> Self {
        Float64(value.to_f64())
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.0 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Float64(self.0 / rhs.0))
    }

    fn abs(&self) -> Self {
        Float64(self.0.abs())
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn pow(&self, exp: usize) -> Self {
        match i32::try_from(exp) {
            Ok(e) => Float64(self.0.powi(e)),
            Err(_) => Float64(self.0.powf(exp as f64)),
        }
    }

    fn fraction_free_determinant(matrix: &SquareMatrix<Self>) -> Self {
        let n = matrix.dim();
        let rows = (0..n)
            .map(|i| (0..n).map(|k| matrix.entry(i, k).0).collect())
            .collect();
        Float64(bareiss_determinant(rows))
    }

    fn agrees_with(&self, other: &Self, scale: &Self) -> bool {
        let (a, b) = (self.0, other.0);
        if a == b {
            return true;
        }
        let reference = a.abs().max(b.abs()).max(scale.0.abs());
        (a - b).abs() <= FLOAT_RELATIVE_TOLERANCE * reference
    }
}

/// Relative error of `approx` against `exact`, with an absolute fallback when
/// the exact value is zero.
pub fn relative_error(approx: f64, exact: &Rational) -> f64 {
    let reference = exact.to_f64();
    let diff = (approx - reference).abs();
    match reference.abs().partial_cmp(&0.0) {
        Some(Ordering::Greater) => diff / reference.abs(),
        _ => diff,
    }
}

/// Sign of an exact value as -1, 0 or 1.
pub fn signum(value: &Rational) -> i8 {
    match value.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Rejects NaN and infinite components.
pub fn checked_complex(re: f64, im: f64) -> Result<Complex> {
    if !re.is_finite() {
        return Err(Error::NonFinite(re.to_string()));
    }
    if !im.is_finite() {
        return Err(Error::NonFinite(im.to_string()));
    }
    Ok(Complex::new(re, im))
}
