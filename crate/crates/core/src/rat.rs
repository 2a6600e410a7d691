//! Exact rational scalars.
//!
//! Everything in this crate computes over arbitrary-precision rationals;
//! there is no floating point anywhere. Values print as `a` or `a/b` in
//! lowest terms, which is also the accepted input syntax.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar type used for all weight coordinates and norms.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Half of an integer.
pub fn half(n: i64) -> Rat {
    ratio(n, 2)
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when `x` lies in `Z + 1/2`.
pub fn is_half_integer(x: &Rat) -> bool {
    *x.denom() == BigInt::from(2)
}

/// Parse `a` or `a/b`. Whitespace around the tokens is accepted.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational `{s}`"));
    if s.is_empty() {
        return Err(mk_err());
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| mk_err())?;
            let d: BigInt = den.trim().parse().map_err(|_| mk_err())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Parse a comma-separated list of rationals.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

pub fn format_rat_list(xs: &[Rat]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// If `x` is an integer that fits in `i64`, return it.
pub fn as_i64(x: &Rat) -> Option<i64> {
    if is_integer(x) {
        i64::try_from(x.numer()).ok()
    } else {
        None
    }
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
