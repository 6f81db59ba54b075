//! Certified numeric evaluation of the defining series: polygamma values at
//! 1/4 and 3/4, the digamma difference, beta(s), zeta(s), and the
//! odd-denominator sum. Every result is a ball whose radius accounts for
//! per-term rounding and a rigorous truncation-tail bound.
//!
//! Plain truncation of these series cannot reach high precision for small
//! exponents (the tails decay polynomially), so the production evaluators
//! sum an explicit head and close the tail with an Euler-Maclaurin
//! expansion whose remainder is bounded by the first omitted term (the
//! summands are completely monotone). The `*_truncated` variants keep the
//! naive head-plus-tail-bound form; they exist to exercise tail-bound
//! honesty at user-chosen cutoffs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::{Mutex, OnceLock};

use crate::numeric_core::{binomial, factorial, BallReal};
use crate::{Error, Result};

/// The two special arguments the engine evaluates polygamma at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarterPoint {
    OneQuarter,
    ThreeQuarters,
}

impl QuarterPoint {
    /// Numerator over 4.
    fn offset(self) -> u64 {
        match self {
            QuarterPoint::OneQuarter => 1,
            QuarterPoint::ThreeQuarters => 3,
        }
    }
}

fn big_rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// B_0..B_n inclusive, via the defining recurrence
/// sum_{k=0}^{n} C(n+1, k) B_k = 0. Cached across calls.
fn bernoulli(n: usize) -> BigRational {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut list = cache.lock().unwrap();
    while list.len() <= n {
        let m = list.len();
        let mut acc = BigRational::zero();
        for (k, b) in list.iter().enumerate() {
            let c = binomial(m as u64 + 1, k as u64).unwrap();
            acc += BigRational::from_integer(c) * b;
        }
        let next = -acc / BigRational::from_integer(BigInt::from(m as u64 + 1));
        list.push(next);
    }
    list[n].clone()
}

/// Raw fixed-point sum with rigorous error bookkeeping.
struct FixedSum {
    value: BigInt,
    /// radius in ulps at the working scale
    err_ulps: BigInt,
}

/// Head sum sum_{n=0}^{cutoff-1} (step n + offset)^(-m) at scale 2^-work.
fn head_sum(step: u64, offset: u64, m: u32, work: u32, cutoff: u64) -> FixedSum {
    let one = BigInt::one() << work;
    let mut sum = BigInt::zero();
    for n in 0..cutoff {
        let base = BigInt::from(step * n + offset);
        sum += &one / base.pow(m);
    }
    FixedSum {
        value: sum,
        err_ulps: BigInt::from(cutoff + 1),
    }
}

/// Certified Euler-Maclaurin closure of sum_{n>=cutoff} (step n + offset)^(-m)
/// as an exact rational plus a remainder bound. Returns None when the
/// expansion fails to converge below `threshold` for this cutoff.
fn em_tail(
    step: u64,
    offset: u64,
    m: u32,
    cutoff: u64,
    threshold: &BigRational,
) -> Option<(BigRational, BigRational)> {
    let q = BigRational::from_integer(BigInt::from(step * cutoff + offset));
    let step_rat = BigRational::from_integer(BigInt::from(step));
    let q_inv_m = q.pow(-(m as i32));
    // integral term: q^(1-m) / (step (m-1)); f(N)/2 term
    let integral = &q_inv_m * &q / (&step_rat * big_rat(m as i64 - 1, 1));
    let half = &q_inv_m / big_rat(2, 1);
    let mut sum = integral + half;

    // correction terms B_2j/(2j)! step^(2j-1) (m)_{2j-1} q^(-(m+2j-1))
    let q_inv2 = q.pow(-2);
    let mut d_pow = step_rat.clone(); // step^(2j-1)
    let step2 = &step_rat * &step_rat;
    let mut poch = BigRational::from_integer(BigInt::from(m)); // (m)_{2j-1}
    let mut q_pow = &q_inv_m * &q_inv2 * &q; // q^(-(m+1))
    let mut fact = big_rat(2, 1); // (2j)!
    let mut prev_mag: Option<BigRational> = None;
    for j in 1..4096usize {
        let term = bernoulli(2 * j) / &fact * &d_pow * &poch * &q_pow;
        let mag = term.abs();
        if &mag <= threshold {
            // remainder of the expansion is below the first omitted term
            return Some((sum, mag));
        }
        if let Some(pm) = &prev_mag {
            if &mag >= pm {
                return None; // asymptotic divergence reached before target
            }
        }
        sum += term;
        prev_mag = Some(mag);
        // advance to j+1
        d_pow *= &step2;
        let a = BigRational::from_integer(BigInt::from(m as u64 + 2 * j as u64 - 1));
        let b = BigRational::from_integer(BigInt::from(m as u64 + 2 * j as u64));
        poch *= a * b;
        q_pow *= &q_inv2;
        let c = BigRational::from_integer(BigInt::from((2 * j as u64 + 1) * (2 * j as u64 + 2)));
        fact *= c;
    }
    None
}

/// Ball containing sum_{n>=0} (step n + offset)^(-m) for m >= 2.
///
/// Radius stays below 2^-precision.
fn power_sum(step: u64, offset: u64, m: u32, precision: u32) -> BallReal {
    assert!(m >= 2, "power_sum requires exponent >= 2");
    let work = precision + 32;
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << (work + 2));
    let mut cutoff = (precision as u64 + m as u64 + 48).max(64);
    loop {
        if let Some((tail, rem)) = em_tail(step, offset, m, cutoff, &threshold) {
            let head = head_sum(step, offset, m, work, cutoff);
            let tail_ball = BallReal::from_rational(&tail, work);
            let rem_ulps = rational_ulps_ceil(&rem, work);
            let mid = head.value + tail_ball.midpoint_scaled();
            let rad = head.err_ulps + tail_ball.radius_scaled() + rem_ulps + 1;
            return BallReal::new(mid, rad, work).round_to(precision + 8);
        }
        cutoff *= 2;
    }
}

/// Ceiling of q * 2^work for non-negative q.
fn rational_ulps_ceil(q: &BigRational, work: u32) -> BigInt {
    debug_assert!(!q.is_negative());
    num_integer::Integer::div_ceil(&(q.numer() << work), q.denom())
}

/// Plain truncation of sum_{n>=0} (step n + offset)^(-m): head plus the
/// integral-test tail bound folded into the enclosure. Cutoff is explicit
/// so tail-bound honesty can be probed directly.
fn power_sum_truncated(step: u64, offset: u64, m: u32, precision: u32, cutoff: u64) -> BallReal {
    assert!(m >= 2 && cutoff >= 1);
    let work = precision + 32;
    let head = head_sum(step, offset, m, work, cutoff);
    // tail in [0, f(N) + integral]
    let q = BigRational::from_integer(BigInt::from(step * cutoff + offset));
    let f_n = q.pow(-(m as i32));
    let integral = &f_n * &q / big_rat((step * (m as u64 - 1)) as i64, 1);
    let bound = f_n + integral;
    let half_ulps = rational_ulps_ceil(&(&bound / big_rat(2, 1)), work);
    let mid = head.value + &half_ulps;
    let rad = head.err_ulps + half_ulps + 2;
    BallReal::new(mid, rad, work)
}

/// psi^(k)(x) for k >= 1 at x in {1/4, 3/4}:
/// (-1)^(k+1) k! sum_{n>=0} (n+x)^(-(k+1)), with the sum rewritten over
/// integer denominators as 4^(k+1) sum (4n+a)^(-(k+1)).
pub fn polygamma_quarter(k: u32, x: QuarterPoint, precision: u32) -> Result<BallReal> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "polygamma_quarter requires k >= 1 (use digamma_difference for k = 0)".into(),
        ));
    }
    let m = k + 1;
    let scale = factorial(k as u64) * (BigInt::one() << (2 * m)); // k! 4^m
    let scale_bits = scale.bits() as u32;
    let inner = precision + scale_bits + 8;
    let s = power_sum(4, x.offset(), m, inner);
    let signed_scale = if k % 2 == 1 { scale } else { -scale };
    Ok(s.mul_int(&signed_scale).round_to(precision + 8))
}

/// atanh(1/w) at scale 2^-work for integer w >= 3, with ulp error bound.
fn atanh_recip_fixed(w: u64, work: u32) -> FixedSum {
    let one = BigInt::one() << work;
    let w = BigInt::from(w);
    let w2 = &w * &w;
    let mut pow = w.clone();
    let mut sum = BigInt::zero();
    let mut terms: u64 = 0;
    let mut k: u64 = 0;
    loop {
        let t = &one / (&pow * (2 * k + 1));
        if t.is_zero() {
            break;
        }
        sum += t;
        pow *= &w2;
        k += 1;
        terms += 1;
    }
    FixedSum {
        value: sum,
        // geometric tail after a zero term stays under two ulps
        err_ulps: BigInt::from(terms + 2),
    }
}

/// psi(1/4) - psi(3/4) = -sum_{n>=0} [1/(n+1/4) - 1/(n+3/4)] = -pi.
///
/// Head terms are 8/((4n+1)(4n+3)); the tail closes with Euler-Maclaurin,
/// whose integral term is ln((4N+3)/(4N+1)) = 2 atanh(1/(4N+2)).
pub fn digamma_difference(precision: u32) -> BallReal {
    let work = precision + 32;
    let one = BigInt::one() << work;
    let cutoff = (precision as u64 + 48).max(64);

    let mut head = BigInt::zero();
    for n in 0..cutoff {
        head += &one * 8u32 / BigInt::from((4 * n + 1) * (4 * n + 3));
    }
    let mut err = BigInt::from(cutoff + 1);

    // integral term, fixed point
    let atanh = atanh_recip_fixed(4 * cutoff + 2, work);
    let mut tail_fixed = atanh.value * 2u32;
    err += atanh.err_ulps * 2u32;

    // g(N)/2 and the Bernoulli corrections, exact rationals
    let a = big_rat(4 * cutoff as i64 + 1, 4); // N + 1/4
    let b = big_rat(4 * cutoff as i64 + 3, 4); // N + 3/4
    let g_n = a.pow(-1) - b.pow(-1);
    let mut corr = &g_n / big_rat(2, 1);
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << (work + 2));
    let a_inv2 = a.pow(-2);
    let b_inv2 = b.pow(-2);
    let mut a_pow = a_inv2.clone();
    let mut b_pow = b_inv2.clone();
    let mut rem = BigRational::zero();
    for j in 1..4096usize {
        let term = bernoulli(2 * j) / big_rat(2 * j as i64, 1) * (&a_pow - &b_pow);
        let mag = term.abs();
        if &mag <= &threshold {
            rem = mag;
            break;
        }
        corr += term;
        a_pow *= &a_inv2;
        b_pow *= &b_inv2;
    }
    let corr_ball = BallReal::from_rational(&corr, work);
    tail_fixed += corr_ball.midpoint_scaled();
    err += corr_ball.radius_scaled() + rational_ulps_ceil(&rem, work) + 1;

    let total = head + tail_fixed;
    BallReal::new(-total, err, work).round_to(precision + 8)
}

/// Dirichlet beta by its defining alternating series, with the tail closed
/// by an Euler transform (binomial difference table). Valid for s >= 1.
pub fn beta_series(s: u32, precision: u32) -> Result<BallReal> {
    if s < 1 {
        return Err(Error::InvalidArgument(format!(
            "beta_series requires s >= 1, got {s}"
        )));
    }
    let work = precision + 48;
    let depth = (work + 2) as u64; // difference orders used
    let cutoff = depth + s as u64 + 32; // head terms
    let one = BigInt::one() << work;

    let mut head = BigInt::zero();
    for n in 0..cutoff {
        let t = &one / BigInt::from(2 * n + 1).pow(s);
        if n % 2 == 0 {
            head += t;
        } else {
            head -= t;
        }
    }

    // b_j = (2(cutoff+j)+1)^(-s), j = 0..=depth
    let mut table: Vec<BigInt> = (0..=depth)
        .map(|j| &one / BigInt::from(2 * (cutoff + j) + 1).pow(s))
        .collect();

    // Euler transform: T = sum_k ((-Delta)^k b)(0) / 2^(k+1); the remainder
    // after `depth` orders is at most ((s+depth)/(2 cutoff+1))^depth <= 2^-depth
    // because the summand is completely monotone.
    let mut tail = BigInt::zero();
    for k in 0..=depth {
        tail += &table[0] >> (k + 1);
        for j in 0..(depth - k) as usize {
            table[j] = &table[j] - &table[j + 1];
        }
    }

    let mid = if cutoff % 2 == 0 {
        head + tail
    } else {
        head - tail
    };
    // head roundings + transform roundings and amplified input ulps + remainder
    let rad = BigInt::from(cutoff + 1) + BigInt::from(2 * (depth + 1)) + 2;
    Ok(BallReal::new(mid, rad, work).round_to(precision + 8))
}

/// Plain-truncation beta: head plus first-omitted-term tail bound.
pub fn beta_series_truncated(s: u32, precision: u32, cutoff: u64) -> Result<BallReal> {
    if s < 1 || cutoff < 1 {
        return Err(Error::InvalidArgument(
            "beta_series_truncated requires s >= 1 and cutoff >= 1".into(),
        ));
    }
    let work = precision + 32;
    let one = BigInt::one() << work;
    let mut head = BigInt::zero();
    for n in 0..cutoff {
        let t = &one / BigInt::from(2 * n + 1).pow(s);
        if n % 2 == 0 {
            head += t;
        } else {
            head -= t;
        }
    }
    // tail lies strictly between 0 and the first omitted term
    let bound = &one / BigInt::from(2 * cutoff + 1).pow(s) + 1u32;
    let half = num_integer::Integer::div_ceil(&bound, &BigInt::from(2));
    let mid = if cutoff % 2 == 0 {
        head + &half
    } else {
        head - &half
    };
    let rad = half + BigInt::from(cutoff + 2);
    Ok(BallReal::new(mid, rad, work))
}

/// zeta(s) = sum_{n>=1} n^(-s), s >= 2.
pub fn zeta_series(s: u32, precision: u32) -> Result<BallReal> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "zeta_series requires s >= 2, got {s}"
        )));
    }
    Ok(power_sum(1, 1, s, precision))
}

/// Plain-truncation zeta with explicit cutoff.
pub fn zeta_series_truncated(s: u32, precision: u32, cutoff: u64) -> Result<BallReal> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "zeta_series_truncated requires s >= 2, got {s}"
        )));
    }
    Ok(power_sum_truncated(1, 1, s, precision, cutoff))
}

/// sum_{k>=1} (2k-1)^(-s), s >= 2. Equals (1 - 2^-s) zeta(s).
pub fn odd_denominator_sum(s: u32, precision: u32) -> Result<BallReal> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "odd_denominator_sum requires s >= 2, got {s}"
        )));
    }
    Ok(power_sum(2, 1, s, precision))
}

/// Plain-truncation odd-denominator sum with explicit cutoff.
pub fn odd_denominator_sum_truncated(s: u32, precision: u32, cutoff: u64) -> Result<BallReal> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "odd_denominator_sum_truncated requires s >= 2, got {s}"
        )));
    }
    Ok(power_sum_truncated(2, 1, s, precision, cutoff))
}
