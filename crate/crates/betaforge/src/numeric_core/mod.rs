//! Arbitrary-precision integer/rational arithmetic, ball-real arithmetic
//! with certified rounding, and an enclosure of pi.
//!
//! Integers and rationals are backed by `num-bigint` / `num-rational`;
//! `BigRational` already maintains the canonical form we require
//! (positive denominator, reduced, zero as 0/1).

mod ball;
mod pi;

pub use ball::BallReal;
pub use pi::pi_ball;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational in canonical form.
pub type Rational = BigRational;

/// n! as an exact integer.
pub fn factorial(n: u64) -> Integer {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k), exact. Rejects k > n.
pub fn binomial(n: u64, k: u64) -> Result<Integer> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "binomial: k = {k} exceeds n = {n}"
        )));
    }
    // multiplicative form keeps intermediates integral
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Ball of width at most 2^(1-precision) containing the rational `q`.
///
/// Dyadic rationals convert exactly (radius zero).
pub fn rational_to_ball(q: &Rational, precision: u32) -> BallReal {
    BallReal::from_rational(q, precision)
}

/// An exact value of the form `coeff * pi^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiForm {
    pub coeff: Rational,
    pub power: u32,
}

impl PiForm {
    pub fn new(coeff: Rational, power: u32) -> Self {
        PiForm { coeff, power }
    }

    /// Certified enclosure of the value at the requested precision.
    pub fn to_ball(&self, precision: u32) -> BallReal {
        // pi^power grows like 2^(1.66 power); work with enough headroom that
        // the final enclosure is tight at `precision`.
        let inner = precision + 32 + 2 * self.power;
        if self.coeff.is_zero() {
            return BallReal::from_rational(&Rational::zero(), precision);
        }
        let p = pi_ball(inner).pow_uint(self.power);
        p.mul_rational(&self.coeff).round_to(precision + 8)
    }
}

impl fmt::Display for PiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() || self.power == 0 {
            return write!(f, "{}/{}", self.coeff.numer(), self.coeff.denom());
        }
        write!(
            f,
            "{}/{} * pi^{}",
            self.coeff.numer(),
            self.coeff.denom(),
            self.power
        )
    }
}

/// Sign-aware helper used by report rendering: exact decimal string of a
/// dyadic rational `m * 2^-prec` (finite by construction).
pub(crate) fn dyadic_to_decimal_string(m: &BigInt, prec: u32) -> String {
    let neg = m.is_negative();
    let mag = m.abs();
    let int_part = &mag >> prec;
    let frac_mask = (BigInt::one() << prec) - 1u32;
    let frac = &mag & &frac_mask;
    let sign = if neg { "-" } else { "" };
    if frac.is_zero() {
        return format!("{sign}{int_part}");
    }
    // frac * 5^prec, left-padded to prec digits, is the exact decimal tail
    let mut five = BigInt::one();
    for _ in 0..prec {
        five *= 5u32;
    }
    let digits = (frac * five).to_string();
    let mut tail = format!("{:0>width$}", digits, width = prec as usize);
    while tail.ends_with('0') {
        tail.pop();
    }
    format!("{sign}{int_part}.{tail}")
}

/// Parse the output of [`dyadic_to_decimal_string`] back to the scaled
/// integer at the given precision. Exact round-trip by construction.
pub(crate) fn decimal_string_to_dyadic(s: &str, prec: u32) -> Result<BigInt> {
    let bad = || Error::MalformedRecord(format!("bad decimal literal: {s}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_s, frac_s) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    let int_part: BigInt = int_s.parse().map_err(|_| bad())?;
    let mut value = int_part << prec;
    if !frac_s.is_empty() {
        let frac: BigInt = frac_s.parse().map_err(|_| bad())?;
        let mut ten = BigInt::one();
        for _ in 0..frac_s.len() {
            ten *= 10u32;
        }
        let scaled = frac << prec;
        let (q, r) = num_integer::Integer::div_rem(&scaled, &ten);
        if !r.is_zero() {
            return Err(bad());
        }
        value += q;
    }
    Ok(if neg { -value } else { value })
}
