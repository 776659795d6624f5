//! Exact rational scalars.
//!
//! Everything in this crate is computed over `Q` with arbitrary precision; there is
//! no floating point anywhere. The text form is `p/q` (or a bare integer when the
//! denominator is one).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"-p/q"` or a bare integer. Whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Always `num/den`, even for integers. Used by machine-readable reports.
pub fn fmt_rational_strict(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact form: integers without the `/1`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// The integer value of `r` if it is an integer that fits in an `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn pow(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), e.unsigned_abs() as usize)
    }
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

/// `n! / (n-k)!`, the falling factorial.
pub fn falling(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
    }
    Rational::from_integer(acc)
}

/// Solves `2n = target` over the integers.
pub fn half_integer_solution(target: &Rational) -> Option<i64> {
    if !is_integer(target) {
        return None;
    }
    let n = target.numer();
    if n.is_even() {
        (n / BigInt::from(2)).to_i64()
    } else {
        None
    }
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
