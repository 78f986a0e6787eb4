//! Scalar abstraction shared by polynomial evaluation and the `ε`/`ξ`
//! routines.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// A field-like scalar that integer polynomial coefficients embed into.
///
/// Implemented for `f32`, `f64` and [`BigRational`]. Only the rational
/// implementation is used for anything that decides an inequality.
pub trait Scalar: Num + Clone + PartialOrd + Neg<Output = Self> + Debug {
    fn from_integer(value: &BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_integer(&BigInt::from(value))
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

impl Scalar for f64 {
    fn from_integer(value: &BigInt) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(value: i64) -> Self {
        value as f64
    }
}

impl Scalar for f32 {
    fn from_integer(value: &BigInt) -> Self {
        value.to_f32().unwrap_or(f32::NAN)
    }

    fn from_i64(value: i64) -> Self {
        value as f32
    }
}

impl Scalar for BigRational {
    fn from_integer(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
}

/// Parses `"p/q"`, `"p"` or a terminating decimal such as `"-0.25"` into
/// an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den == BigInt::from(0) {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::from(0),
            digits => digits.parse().ok()?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part: BigInt = frac.parse().ok()?;
        let magnitude = BigRational::new(int_part * &scale + frac_part, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    text.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Decimal approximation of an exact rational, for display.
pub fn approx(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
