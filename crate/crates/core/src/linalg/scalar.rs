//! Exact rational scalars.
//!
//! Every entry in the toolkit is a [`Scalar`], an arbitrary-precision rational
//! kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn checked_div(a: &Scalar, b: &Scalar) -> Result<Scalar> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = |message: &str| Error::Parse {
        offset: 0,
        message: format!("{message}: {s:?}"),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad("invalid denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Scalar::new(num, den))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_to_lowest_terms() {
        let x = parse_scalar("6/-4").unwrap();
        assert_eq!(x, ratio(-3, 2));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(format_scalar(&x), "-3/2");
        assert_eq!(format_scalar(&parse_scalar(" 7 ").unwrap()), "7");
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(parse_scalar("1/0"), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&one(), &zero()), Err(Error::DivisionByZero));
        assert!(parse_scalar("x/2").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn big_values_survive_round_trip() {
        let s = "123456789012345678901234567891/7";
        assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
    }
}
