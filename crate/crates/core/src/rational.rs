//! Exact rational numbers used for every coefficient, bound value and region
//! coordinate.
//!
//! `Rational` is an alias for [`num_rational::BigRational`], which keeps values
//! in canonical form (reduced, positive denominator). This module adds the
//! small amount of glue the rest of the crate needs: construction from
//! machine integers, parsing of `"p/q"` strings and fixed-point decimal
//! rendering with round-half-even.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn from_usize(value: usize) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"-0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        if text.contains('/') {
            return Err(format!("cannot mix '/' and '.' in {text:?}"));
        }
        let negative = int_part.starts_with('-');
        let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed decimal {text:?}"));
        }
        let mut numer = BigInt::from_str(&digits).map_err(|e| format!("{text:?}: {e}"))?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        return Ok(BigRational::new(numer, denom));
    }
    let value = BigRational::from_str(text).map_err(|e| format!("malformed rational {text:?}: {e}"))?;
    Ok(value)
}

/// Canonical exact string: `"p/q"`, or `"p"` when the value is an integer.
pub fn exact_string(value: &Rational) -> String {
    value.to_string()
}

/// Decimal rendering with exactly `places` fractional digits, rounding half
/// to even.
pub fn decimal_string(value: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = value * BigRational::from_integer(scale.clone());
    let floor = scaled.floor();
    let remainder = &scaled - &floor;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut digits = floor.to_integer();
    if remainder > half || (remainder == half && digits.is_odd()) {
        digits += 1;
    }
    let negative = digits.is_negative();
    let magnitude = digits.abs();
    let (whole, frac) = magnitude.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>places$}")
    }
}

/// Decimal rendering truncated toward zero to `places` digits.
pub fn truncated_decimal_string(value: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = (value * BigRational::from_integer(scale.clone())).trunc().to_integer();
    let negative = scaled.is_negative();
    let (whole, frac) = scaled.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>places$}")
    }
}

/// Lossy conversion for plotting.
pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn is_integer(value: &Rational) -> bool {
    value.is_integer()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Serializes a rational as its exact `"p/q"` string.
pub mod serde_exact {
    use super::{exact_string, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&exact_string(value))
    }

    pub mod option {
        use super::super::{exact_string, Rational};
        use serde::Serializer;

        pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => s.serialize_str(&exact_string(v)),
                None => s.serialize_none(),
            }
        }
    }
}
