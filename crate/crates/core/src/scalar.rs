//! Exact rational scalars.
//!
//! Every structural computation in the crate runs over arbitrary-precision
//! rationals. `BigRational` already keeps values reduced with a positive
//! denominator, so the alias carries the canonical-form invariant for free.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// A coordinate vector in some fixed basis.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`; panics on a zero denominator, so only use it with literals.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Floating literals are rejected.
pub fn parse(text: &str) -> Result<Scalar> {
    let trimmed = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if trimmed.is_empty() {
        return Err(bad());
    }
    match trimmed.split_once('/') {
        None => BigInt::from_str(trimmed)
            .map(Scalar::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root of a non-negative rational, if it has one.
pub fn sqrt_exact(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &n * &n == *x.numer() && &d * &d == *x.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}

/// Bit-size of numerator plus denominator; used as a pivot-growth heuristic.
pub(crate) fn height(x: &Scalar) -> u64 {
    x.numer().bits() + x.denom().bits()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero_vector(a: &[Scalar]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn from_ints(values: &[i64]) -> Vector {
    values.iter().map(|&v| int(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format(&parse("6/4").unwrap()), "3/2");
        assert_eq!(format(&parse("-2/-4").unwrap()), "1/2");
        assert_eq!(format(&parse(" 7 ").unwrap()), "7");
        assert_eq!(format(&parse("0/5").unwrap()), "0");
        assert_eq!(format(&parse("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_floats_and_garbage() {
        assert!(parse("1.5").is_err());
        assert!(parse("1e3").is_err());
        assert!(parse("").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("a/b").is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
        assert_eq!(sqrt_exact(&int(0)), Some(int(0)));
    }
}
