//! Number modes for the coefficient routines.
//!
//! Every routine that manipulates recurrence data or polynomial coefficients is
//! generic over [`Scalar`], which is implemented for `f64` (floating mode) and
//! [`BigRational`] (exact mode). The exact mode is what the identity checks run
//! on: two rationals are either equal or they are not.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumberMode {
    Floating,
    Rational,
}

impl std::fmt::Display for NumberMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NumberMode::Floating => f.write_str("floating"),
            NumberMode::Rational => f.write_str("rational"),
        }
    }
}

/// A field element usable by the coefficient routines.
pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    const MODE: NumberMode;

    fn from_int(v: i64) -> Self;

    /// `num / den`, exact in rational mode.
    fn ratio(num: i64, den: i64) -> Self;

    /// False only for floating values that overflowed or became NaN.
    fn is_finite_value(&self) -> bool;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn cube(&self) -> Self {
        self.clone() * self.clone() * self.clone()
    }
}

impl Scalar for f64 {
    const MODE: NumberMode = NumberMode::Floating;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl Scalar for BigRational {
    const MODE: NumberMode = NumberMode::Rational;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_finite_value(&self) -> bool {
        true
    }
}

/// Parse `"p/q"`, an integer, or a terminating decimal such as `"-0.25"` into an
/// exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mantissa: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(mantissa, scale);
    Some(if negative { -value } else { value })
}

pub(crate) fn one<T: Scalar>() -> T {
    T::one()
}

pub(crate) fn int<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("-1/2"), Some(BigRational::ratio(-1, 2)));
        assert_eq!(parse_rational("5/2"), Some(BigRational::ratio(5, 2)));
        assert_eq!(parse_rational("-0.25"), Some(BigRational::ratio(-1, 4)));
        assert_eq!(parse_rational("10"), Some(BigRational::from_int(10)));
        assert_eq!(parse_rational(".5"), Some(BigRational::ratio(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("1e3"), None);
    }

    #[test]
    fn modes() {
        assert_eq!(<f64 as Scalar>::MODE, NumberMode::Floating);
        assert_eq!(<BigRational as Scalar>::MODE, NumberMode::Rational);
        assert!(!f64::INFINITY.is_finite_value());
    }
}
