//! Arbitrary-precision rational helpers.
//!
//! `Rat` is a re-export of `num_rational::BigRational`: always reduced,
//! denominator positive. The helpers here cover the handful of operations the
//! rest of the kernel needs constantly (integer extraction, mod-1 reduction,
//! parsing) without littering call sites with `BigInt` plumbing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer value, if the rational is an integer.
pub fn as_integer(r: &Rat) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Exact `i64` value, if the rational is an integer that fits.
pub fn as_i64(r: &Rat) -> Option<i64> {
    as_integer(r).and_then(|n| i64::try_from(&n).ok())
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Representative of `r` in `[0, 1)`, i.e. `r mod 1`.
pub fn mod1(r: &Rat) -> Rat {
    let num = r.numer().mod_floor(r.denom());
    Rat::new(num, r.denom().clone())
}

/// Floor of a rational as `BigInt`.
pub fn floor_int(r: &Rat) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Parse `"-3"`, `"5/4"`, `"-7/2"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Render as `"p"` or `"p/q"`.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of two positive `u64`s.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Rational absolute value.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
