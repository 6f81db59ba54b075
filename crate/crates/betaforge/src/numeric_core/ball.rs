//! Fixed-point ball arithmetic: a real is stored as `mid * 2^-prec` with a
//! non-negative radius `rad * 2^-prec`. Every operation returns an enclosure
//! of the exact result set; rounding always inflates the radius.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallReal {
    mid: BigInt,
    rad: BigInt,
    prec: u32,
}

/// Floor-shift right; flags inexactness.
fn shift_floor(v: &BigInt, s: u32) -> (BigInt, bool) {
    if s == 0 {
        return (v.clone(), false);
    }
    let q = v >> s;
    let exact = (&q << s) == *v;
    (q, !exact)
}

/// Ceil-shift right (for radii).
fn shift_ceil(v: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return v.clone();
    }
    let (q, inexact) = shift_floor(v, s);
    if inexact {
        q + 1
    } else {
        q
    }
}

impl BallReal {
    pub fn new(mid: BigInt, rad: BigInt, prec: u32) -> Self {
        debug_assert!(!rad.is_negative());
        BallReal { mid, rad, prec }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn midpoint_scaled(&self) -> &BigInt {
        &self.mid
    }

    pub fn radius_scaled(&self) -> &BigInt {
        &self.rad
    }

    pub fn exact_integer(n: impl Into<BigInt>, prec: u32) -> Self {
        BallReal::new(n.into() << prec, BigInt::zero(), prec)
    }

    pub fn zero(prec: u32) -> Self {
        BallReal::new(BigInt::zero(), BigInt::zero(), prec)
    }

    /// Smallest-radius ball at `prec` containing the rational `q`.
    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled_num = q.numer() << prec;
        // canonical rationals have den > 0, so floor keeps m <= q*2^p < m+1
        let (m, r) = num_integer::Integer::div_mod_floor(&scaled_num, q.denom());
        if r.is_zero() {
            BallReal::new(m, BigInt::zero(), prec)
        } else {
            BallReal::new(m, BigInt::one(), prec)
        }
    }

    pub fn midpoint_rational(&self) -> BigRational {
        BigRational::new(self.mid.clone(), BigInt::one() << self.prec)
    }

    pub fn radius_rational(&self) -> BigRational {
        BigRational::new(self.rad.clone(), BigInt::one() << self.prec)
    }

    pub fn lower(&self) -> BigRational {
        BigRational::new(&self.mid - &self.rad, BigInt::one() << self.prec)
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new(&self.mid + &self.rad, BigInt::one() << self.prec)
    }

    /// Re-express at `prec` bits. Raising precision is exact; lowering
    /// rounds the midpoint and inflates the radius by one ulp.
    pub fn round_to(&self, prec: u32) -> BallReal {
        if prec >= self.prec {
            let s = prec - self.prec;
            BallReal::new(&self.mid << s, &self.rad << s, prec)
        } else {
            let s = self.prec - prec;
            let (m, inexact) = shift_floor(&self.mid, s);
            let mut r = shift_ceil(&self.rad, s);
            if inexact {
                r += 1;
            }
            BallReal::new(m, r, prec)
        }
    }

    fn aligned(&self, other: &BallReal) -> (BallReal, BallReal, u32) {
        let p = self.prec.max(other.prec);
        (self.round_to(p), other.round_to(p), p)
    }

    pub fn neg(&self) -> BallReal {
        BallReal::new(-&self.mid, self.rad.clone(), self.prec)
    }

    pub fn add(&self, other: &BallReal) -> BallReal {
        let (a, b, p) = self.aligned(other);
        BallReal::new(a.mid + b.mid, a.rad + b.rad, p)
    }

    pub fn sub(&self, other: &BallReal) -> BallReal {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BallReal) -> BallReal {
        let (a, b, p) = self.aligned(other);
        // exact at scale 2p, then reduce back to p
        let mid2 = &a.mid * &b.mid;
        let rad2 = a.mid.abs() * &b.rad + b.mid.abs() * &a.rad + &a.rad * &b.rad;
        let (m, inexact) = shift_floor(&mid2, p);
        let mut r = shift_ceil(&rad2, p);
        if inexact {
            r += 1;
        }
        BallReal::new(m, r, p)
    }

    /// Multiply by an exact integer (no rounding).
    pub fn mul_int(&self, n: &BigInt) -> BallReal {
        BallReal::new(&self.mid * n, &self.rad * n.abs(), self.prec)
    }

    /// Multiply by an exact rational; one ulp of rounding on mid and radius.
    pub fn mul_rational(&self, q: &BigRational) -> BallReal {
        let num = q.numer();
        let den = q.denom();
        let mid_num = &self.mid * num;
        let (m, r_mid) = num_integer::Integer::div_mod_floor(&mid_num, den);
        let mut r = num_integer::Integer::div_ceil(&(&self.rad * num.abs()), den);
        if !r_mid.is_zero() {
            r += 1;
        }
        BallReal::new(m, r, self.prec)
    }

    /// Enclosure of x/y over x in self, y in other. Errors if the divisor
    /// ball contains zero.
    pub fn div(&self, other: &BallReal) -> Result<BallReal> {
        if other.rad >= other.mid.abs() {
            return Err(Error::DivisionByZeroBall);
        }
        let (a, b, p) = self.aligned(other);
        let a_lo = &a.mid - &a.rad;
        let a_hi = &a.mid + &a.rad;
        let b_lo = &b.mid - &b.rad;
        let b_hi = &b.mid + &b.rad;
        // endpoint quotients at scale p with outward rounding
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for num in [&a_lo, &a_hi] {
            for den in [&b_lo, &b_hi] {
                let scaled = num << p;
                let q_floor = num_integer::Integer::div_floor(&scaled, den);
                let q_ceil = num_integer::Integer::div_ceil(&scaled, den);
                lo = Some(match lo {
                    Some(v) => v.min(q_floor),
                    None => q_floor,
                });
                hi = Some(match hi {
                    Some(v) => v.max(q_ceil),
                    None => q_ceil,
                });
            }
        }
        let lo = lo.unwrap();
        let hi = hi.unwrap();
        let mid = num_integer::Integer::div_floor(&(&lo + &hi), &BigInt::from(2));
        let rad = &hi - &mid;
        Ok(BallReal::new(mid, rad, p))
    }

    /// Integer power by repeated squaring; n = 0 gives the exact ball 1.
    pub fn pow_uint(&self, n: u32) -> BallReal {
        let mut acc = BallReal::exact_integer(1, self.prec);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        // |q - mid/2^p| <= rad/2^p, compared exactly
        let lhs = (q.numer() << self.prec) - &self.mid * q.denom();
        lhs.abs() <= &self.rad * q.denom()
    }

    pub fn contains_ball(&self, other: &BallReal) -> bool {
        self.lower() <= other.lower() && other.upper() <= self.upper()
    }

    pub fn intersects(&self, other: &BallReal) -> bool {
        let (a, b, _) = self.aligned(other);
        (a.mid - b.mid).abs() <= a.rad + b.rad
    }

    /// Upper bound on |self - other| as an exact rational.
    pub fn residual_bound(&self, other: &BallReal) -> BigRational {
        let (a, b, p) = self.aligned(other);
        BigRational::new((a.mid - b.mid).abs() + a.rad + b.rad, BigInt::one() << p)
    }

    /// Largest digit count D <= max_digits such that the whole enclosure,
    /// plus the truncation slop, stays within one unit in the D-th decimal
    /// place of the printed midpoint.
    pub fn justified_digits(&self, max_digits: usize) -> usize {
        let two_pow = BigInt::one() << self.prec;
        let slack = &self.rad * 2 + 1;
        let mut d = max_digits;
        let mut ten_pow = BigInt::from(10u32).pow(d as u32);
        while d > 0 && &slack * &ten_pow > two_pow {
            d -= 1;
            ten_pow /= 10u32;
        }
        d
    }

    /// Decimal rendering of the midpoint truncated (toward zero) to
    /// `digits` places after the point.
    pub fn decimal_truncated(&self, digits: usize) -> String {
        let neg = self.mid.is_negative();
        let mag = self.mid.abs();
        let ten_pow = BigInt::from(10u32).pow(digits as u32);
        let scaled = (mag * &ten_pow) >> self.prec;
        let (int_part, frac) = num_integer::Integer::div_rem(&scaled, &ten_pow);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!("{sign}{int_part}.{:0>width$}", frac, width = digits)
    }
}

impl fmt::Display for BallReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.justified_digits(self.prec as usize / 3);
        write!(f, "{} +/- 2^-{}*{}", self.decimal_truncated(digits), self.prec, self.rad)
    }
}
