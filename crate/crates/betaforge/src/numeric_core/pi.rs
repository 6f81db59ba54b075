//! Certified enclosure of pi via the Machin formula
//! pi = 16 atan(1/5) - 4 atan(1/239).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ball::BallReal;

/// Fixed-point atan(1/x) at scale 2^-bits for integer x >= 2.
///
/// Returns (value, error bound in ulps). The alternating series
/// sum (-1)^k / ((2k+1) x^(2k+1)) has monotonically decreasing terms, so
/// the truncation error is below the first omitted term; we stop once the
/// floor-divided term reaches zero, at which point the tail is under one
/// ulp. Each kept term contributes at most one ulp of rounding.
fn atan_recip_fixed(x: u64, bits: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << bits;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut denom_pow = x.clone(); // x^(2k+1)
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    let mut terms: u64 = 0;
    loop {
        let term = &one / (&denom_pow * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        denom_pow *= &x2;
        k += 1;
        terms += 1;
    }
    (sum, BigInt::from(terms + 1))
}

/// Ball containing pi with radius at most 2^(2-precision).
///
/// The ball is carried at a slightly finer scale than requested so the
/// midpoint stays sharp even for small precisions.
pub fn pi_ball(precision: u32) -> BallReal {
    let precision = precision.max(8);
    let work = precision + 32;
    let (a5, e5) = atan_recip_fixed(5, work);
    let (a239, e239) = atan_recip_fixed(239, work);
    let mid = &a5 * 16 - &a239 * 4;
    let rad = e5 * 16 + e239 * 4;
    BallReal::new(mid, rad, work)
}
