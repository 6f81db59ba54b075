//! One operation per identity relating beta, zeta, polygamma values at
//! quarter arguments, cotangent-derivative polynomials, and Euler numbers,
//! plus the harness that cross-validates every route at a requested
//! precision.
//!
//! Note on the even-zeta closed form: combining the reflection relation
//! with the polygamma definition of zeta(2s) forces a minus sign in front
//! of P_{2s-1}(1) (the literal reading would make zeta(2) negative).
//! [`zeta_even_exact`] applies the correction; the uncorrected form is kept
//! available as a negative control for the harness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cot_engine::cot_derivative_poly;
use crate::numeric_core::{factorial, BallReal, PiForm};
use crate::series_eval::{
    beta_series, digamma_difference, polygamma_quarter, zeta_series, QuarterPoint,
};
use crate::{Error, Result};

/// An even-indexed Euler number E_{2s}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerNumber {
    pub index: u64,
    pub value: BigInt,
}

/// Identity checked by the harness, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdentityId {
    /// zeta from the polygamma sum at 1/4 and 3/4
    ZetaViaPolygamma,
    /// beta from the polygamma difference at 1/4 and 3/4
    BetaViaPolygamma,
    /// beta from zeta minus the psi(3/4) correction
    BetaViaZetaCorrection,
    /// zeta from beta plus the psi(3/4) correction, even argument
    ZetaViaBetaEven,
    /// zeta from beta minus the psi(3/4) correction, odd argument
    ZetaViaBetaOdd,
    /// reflection relation, odd cot-derivative order (even s)
    ReflectionOddDerivative,
    /// reflection relation, even cot-derivative order (odd s)
    ReflectionEvenDerivative,
    /// exact pi-form of beta at odd arguments vs. the series
    BetaOddClosedForm,
    /// exact pi-form of zeta at even arguments vs. the series
    ZetaEvenClosedForm,
    /// Euler-number closed form of beta at odd arguments vs. the series
    EulerClosedForm,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::ZetaViaPolygamma => "zeta_via_polygamma",
            IdentityId::BetaViaPolygamma => "beta_via_polygamma",
            IdentityId::BetaViaZetaCorrection => "beta_via_zeta_correction",
            IdentityId::ZetaViaBetaEven => "zeta_via_beta_even",
            IdentityId::ZetaViaBetaOdd => "zeta_via_beta_odd",
            IdentityId::ReflectionOddDerivative => "reflection_odd_derivative",
            IdentityId::ReflectionEvenDerivative => "reflection_even_derivative",
            IdentityId::BetaOddClosedForm => "beta_odd_closed_form",
            IdentityId::ZetaEvenClosedForm => "zeta_even_closed_form",
            IdentityId::EulerClosedForm => "euler_closed_form",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "zeta_via_polygamma" => IdentityId::ZetaViaPolygamma,
            "beta_via_polygamma" => IdentityId::BetaViaPolygamma,
            "beta_via_zeta_correction" => IdentityId::BetaViaZetaCorrection,
            "zeta_via_beta_even" => IdentityId::ZetaViaBetaEven,
            "zeta_via_beta_odd" => IdentityId::ZetaViaBetaOdd,
            "reflection_odd_derivative" => IdentityId::ReflectionOddDerivative,
            "reflection_even_derivative" => IdentityId::ReflectionEvenDerivative,
            "beta_odd_closed_form" => IdentityId::BetaOddClosedForm,
            "zeta_even_closed_form" => IdentityId::ZetaEvenClosedForm,
            "euler_closed_form" => IdentityId::EulerClosedForm,
            other => return Err(Error::MalformedRecord(format!("unknown identity: {other}"))),
        })
    }
}

/// Residual record for one identity at one argument.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub s: u32,
    pub precision: u32,
    pub left: BallReal,
    pub right: BallReal,
    pub residual_bound: BigRational,
    pub pass: bool,
}

impl IdentityReport {
    fn from_routes(
        identity: IdentityId,
        s: u32,
        precision: u32,
        left: BallReal,
        right: BallReal,
    ) -> Self {
        let pass = left.intersects(&right);
        let residual_bound = left.residual_bound(&right);
        IdentityReport {
            identity,
            s,
            precision,
            left,
            right,
            residual_bound,
            pass,
        }
    }
}

fn sign(s: u32) -> BigRational {
    if s % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn pow2(s: u32) -> BigInt {
    BigInt::one() << s
}

/// zeta(s) = (-1)^s (psi^(s-1)(1/4) + psi^(s-1)(3/4)) / (2^s (2^s - 1) Gamma(s)).
pub fn zeta_via_polygamma(s: u32, precision: u32) -> Result<BallReal> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "zeta_via_polygamma requires s >= 2, got {s}"
        )));
    }
    let inner = precision + 8;
    let a = polygamma_quarter(s - 1, QuarterPoint::OneQuarter, inner)?;
    let b = polygamma_quarter(s - 1, QuarterPoint::ThreeQuarters, inner)?;
    let den = pow2(s) * (pow2(s) - 1) * factorial(s as u64 - 1);
    let factor = sign(s) / BigRational::from_integer(den);
    Ok(a.add(&b).mul_rational(&factor).round_to(precision + 8))
}

/// beta(s) = (-1)^s (psi^(s-1)(1/4) - psi^(s-1)(3/4)) / (2^s 2^s Gamma(s)).
///
/// At s = 1 the individual digamma series diverge; the convergent
/// difference series is used instead.
pub fn beta_via_polygamma(s: u32, precision: u32) -> Result<BallReal> {
    if s < 1 {
        return Err(Error::InvalidArgument(format!(
            "beta_via_polygamma requires s >= 1, got {s}"
        )));
    }
    let inner = precision + 8;
    let diff = if s == 1 {
        digamma_difference(inner)
    } else {
        let a = polygamma_quarter(s - 1, QuarterPoint::OneQuarter, inner)?;
        let b = polygamma_quarter(s - 1, QuarterPoint::ThreeQuarters, inner)?;
        a.sub(&b)
    };
    let den = pow2(2 * s) * factorial(s as u64 - 1);
    let factor = sign(s) / BigRational::from_integer(den);
    Ok(diff.mul_rational(&factor).round_to(precision + 8))
}

/// beta(s) = ((2^s - 1)/2^s) zeta(s) - (-1)^s (2 / (2^s 2^s Gamma(s))) psi^(s-1)(3/4).
pub fn beta_via_zeta_correction(s: u32, precision: u32) -> Result<BallReal> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "beta_via_zeta_correction requires s >= 2, got {s}"
        )));
    }
    let inner = precision + 8;
    let zeta_part = zeta_series(s, inner)?
        .mul_rational(&BigRational::new(pow2(s) - 1, pow2(s)));
    let corr_factor =
        sign(s) * BigRational::new(BigInt::from(2), pow2(2 * s) * factorial(s as u64 - 1));
    let corr = polygamma_quarter(s - 1, QuarterPoint::ThreeQuarters, inner)?
        .mul_rational(&corr_factor);
    Ok(zeta_part.sub(&corr).round_to(precision + 8))
}

/// zeta(s) = (2^s/(2^s - 1)) beta(s) + (-1)^s (2/(2^s (2^s - 1) Gamma(s))) psi^(s-1)(3/4).
///
/// The (-1)^s factor realizes the even/odd specializations: the correction
/// enters with + for even s and - for odd s.
pub fn zeta_via_beta(s: u32, precision: u32) -> Result<BallReal> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "zeta_via_beta requires s >= 2, got {s}"
        )));
    }
    let inner = precision + 8;
    let beta_part = beta_series(s, inner)?
        .mul_rational(&BigRational::new(pow2(s), pow2(s) - 1));
    let corr_factor = sign(s)
        * BigRational::new(
            BigInt::from(2),
            pow2(s) * (pow2(s) - 1) * factorial(s as u64 - 1),
        );
    let corr = polygamma_quarter(s - 1, QuarterPoint::ThreeQuarters, inner)?
        .mul_rational(&corr_factor);
    Ok(beta_part.add(&corr).round_to(precision + 8))
}

/// Exact closed form beta(2s+1) = P_2s(1) / (2^(2s+1) 2^(2s+1) Gamma(2s+1)) * pi^(2s+1).
pub fn beta_odd_exact(s: u32) -> PiForm {
    let p_val = cot_derivative_poly(2 * s as usize).eval_at_one();
    let den = pow2(2 * (2 * s + 1)) * factorial(2 * s as u64);
    let coeff = BigRational::new(p_val, den);
    debug_assert!(coeff.is_positive());
    PiForm::new(coeff, 2 * s + 1)
}

/// Exact closed form zeta(2s) = -P_{2s-1}(1) / (2^(2s) (2^(2s) - 1) Gamma(2s)) * pi^(2s),
/// with the sign correction that keeps the value positive.
pub fn zeta_even_exact(s: u32) -> PiForm {
    assert!(s >= 1, "zeta_even_exact requires s >= 1");
    let p_val = cot_derivative_poly(2 * s as usize - 1).eval_at_one();
    let den = pow2(2 * s) * (pow2(2 * s) - 1) * factorial(2 * s as u64 - 1);
    let coeff = BigRational::new(-p_val, den);
    debug_assert!(coeff.is_positive());
    PiForm::new(coeff, 2 * s)
}

/// Literal (sign-uncorrected) reading of the even-zeta closed form.
/// Produces -zeta(2s); kept as a negative control for the harness.
pub fn zeta_even_exact_uncorrected(s: u32) -> PiForm {
    assert!(s >= 1);
    let p_val = cot_derivative_poly(2 * s as usize - 1).eval_at_one();
    let den = pow2(2 * s) * (pow2(2 * s) - 1) * factorial(2 * s as u64 - 1);
    PiForm::new(BigRational::new(p_val, den), 2 * s)
}

/// E_{2s} via the beta closed form, reduced to the exact real form
/// E_{2s} = (-1)^s P_{2s}(1) / 2^(2s).
pub fn euler_via_beta(two_s: u64) -> Result<EulerNumber> {
    if two_s % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "euler_via_beta requires an even index, got {two_s}"
        )));
    }
    let p_val = cot_derivative_poly(two_s as usize).eval_at_one();
    let den = BigInt::one() << two_s;
    let (q, r) = num_integer::Integer::div_rem(&p_val, &den);
    assert!(r.is_zero(), "P_2s(1) must be divisible by 2^(2s)");
    let value = if (two_s / 2) % 2 == 1 { -q } else { q };
    Ok(EulerNumber {
        index: two_s,
        value,
    })
}

/// Independent oracle: E_0 = 1 and sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0.
pub fn euler_recurrence(two_s: u64) -> Result<EulerNumber> {
    if two_s % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "euler_recurrence requires an even index, got {two_s}"
        )));
    }
    let n_max = two_s / 2;
    let mut known: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for (k, e) in known.iter().enumerate() {
            acc += crate::numeric_core::binomial(2 * n, 2 * k as u64)? * e;
        }
        known.push(-acc);
    }
    Ok(EulerNumber {
        index: two_s,
        value: known[n_max as usize].clone(),
    })
}

/// Reflection relation at z = 1/4:
/// (-1)^(s-1) psi^(s-1)(3/4) - psi^(s-1)(1/4) = pi^s P_{s-1}(1).
pub fn reflection_check(s: u32, precision: u32) -> Result<IdentityReport> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "reflection_check requires s >= 2, got {s}"
        )));
    }
    let inner = precision + 8;
    let at_three = polygamma_quarter(s - 1, QuarterPoint::ThreeQuarters, inner)?;
    let at_one = polygamma_quarter(s - 1, QuarterPoint::OneQuarter, inner)?;
    let left = if s % 2 == 0 {
        at_three.neg().sub(&at_one)
    } else {
        at_three.sub(&at_one)
    };
    let p_val = cot_derivative_poly(s as usize - 1).eval_at_one();
    let right = PiForm::new(BigRational::from_integer(p_val), s).to_ball(inner);
    let id = if s % 2 == 0 {
        IdentityId::ReflectionOddDerivative
    } else {
        IdentityId::ReflectionEvenDerivative
    };
    Ok(IdentityReport::from_routes(id, s, precision, left, right))
}

/// Run every identity for s = 1..=max_s where defined; reports are sorted
/// by (identity, s). Overall pass iff every report passes.
pub fn verify_all(max_s: u32, precision: u32) -> Vec<IdentityReport> {
    verify_all_with_options(max_s, precision, false)
}

/// Harness with the eq-17 negative-control switch: when
/// `literal_even_zeta` is set, the uncorrected closed form is used for
/// the even-zeta reports, which must fail.
pub fn verify_all_with_options(
    max_s: u32,
    precision: u32,
    literal_even_zeta: bool,
) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    for s in 1..=max_s {
        let beta_ref = beta_series(s, precision).expect("s >= 1");
        reports.push(IdentityReport::from_routes(
            IdentityId::BetaViaPolygamma,
            s,
            precision,
            beta_via_polygamma(s, precision).expect("s >= 1"),
            beta_ref.clone(),
        ));
        if s >= 2 {
            let zeta_ref = zeta_series(s, precision).expect("s >= 2");
            reports.push(IdentityReport::from_routes(
                IdentityId::ZetaViaPolygamma,
                s,
                precision,
                zeta_via_polygamma(s, precision).expect("s >= 2"),
                zeta_ref.clone(),
            ));
            reports.push(IdentityReport::from_routes(
                IdentityId::BetaViaZetaCorrection,
                s,
                precision,
                beta_via_zeta_correction(s, precision).expect("s >= 2"),
                beta_ref.clone(),
            ));
            let id = if s % 2 == 0 {
                IdentityId::ZetaViaBetaEven
            } else {
                IdentityId::ZetaViaBetaOdd
            };
            reports.push(IdentityReport::from_routes(
                id,
                s,
                precision,
                zeta_via_beta(s, precision).expect("s >= 2"),
                zeta_ref.clone(),
            ));
            reports.push(reflection_check(s, precision).expect("s >= 2"));
            if s % 2 == 0 {
                let form = if literal_even_zeta {
                    zeta_even_exact_uncorrected(s / 2)
                } else {
                    zeta_even_exact(s / 2)
                };
                reports.push(IdentityReport::from_routes(
                    IdentityId::ZetaEvenClosedForm,
                    s,
                    precision,
                    form.to_ball(precision),
                    zeta_ref.clone(),
                ));
            }
        }
        if s % 2 == 1 {
            let half = (s - 1) / 2;
            reports.push(IdentityReport::from_routes(
                IdentityId::BetaOddClosedForm,
                s,
                precision,
                beta_odd_exact(half).to_ball(precision),
                beta_ref.clone(),
            ));
            // Euler closed form: beta(2t+1) = |E_2t| pi^(2t+1) / (2 2^(2t+1) Gamma(2t+1)),
            // with E_2t supplied by the independent recurrence oracle.
            let e = euler_recurrence(2 * half as u64).expect("even index");
            let den = pow2(s + 1) * factorial(s as u64 - 1);
            let form = PiForm::new(BigRational::new(e.value.abs(), den), s);
            reports.push(IdentityReport::from_routes(
                IdentityId::EulerClosedForm,
                s,
                precision,
                form.to_ball(precision),
                beta_ref,
            ));
        }
    }
    reports.sort_by_key(|r| (r.identity, r.s));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric_core::pi_ball;
    use crate::series_eval::odd_denominator_sum;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zeta_via_polygamma_closed_forms() {
        let pi = pi_ball(192);
        let z2 = zeta_via_polygamma(2, 128).unwrap();
        assert!(z2.intersects(&pi.pow_uint(2).mul_rational(&rat(1, 6))));
        let z4 = zeta_via_polygamma(4, 128).unwrap();
        assert!(z4.intersects(&pi.pow_uint(4).mul_rational(&rat(1, 90))));
        let z3 = zeta_via_polygamma(3, 128).unwrap();
        assert!(z3.intersects(&zeta_series(3, 128).unwrap()));
        assert!(zeta_via_polygamma(1, 64).is_err());
    }

    #[test]
    fn psi_prime_sum_is_two_pi_squared() {
        // internal to the s = 2 case: psi'(1/4) + psi'(3/4) = 2 pi^2
        let a = polygamma_quarter(1, QuarterPoint::OneQuarter, 128).unwrap();
        let b = polygamma_quarter(1, QuarterPoint::ThreeQuarters, 128).unwrap();
        let two_pi2 = pi_ball(192).pow_uint(2).mul_rational(&rat(2, 1));
        assert!(a.add(&b).intersects(&two_pi2));
    }

    #[test]
    fn beta_via_polygamma_reference_values() {
        let b1 = beta_via_polygamma(1, 128).unwrap();
        assert!(b1.intersects(&pi_ball(192).mul_rational(&rat(1, 4))));
        let b2 = beta_via_polygamma(2, 128).unwrap();
        assert!(b2.lower() < rat(915965594178, 1_000_000_000_000));
        assert!(b2.upper() > rat(915965594177, 1_000_000_000_000));
        let b3 = beta_via_polygamma(3, 128).unwrap();
        assert!(b3.lower() < rat(968946146260, 1_000_000_000_000));
        assert!(b3.upper() > rat(968946146259, 1_000_000_000_000));
    }

    #[test]
    fn beta_via_zeta_correction_matches_series() {
        for s in 2..=8u32 {
            let a = beta_via_zeta_correction(s, 128).unwrap();
            let b = beta_series(s, 128).unwrap();
            assert!(a.intersects(&b), "s = {s}");
        }
        assert!(beta_via_zeta_correction(1, 64).is_err());
    }

    #[test]
    fn zeta_via_beta_routes() {
        let pi = pi_ball(192);
        let z2 = zeta_via_beta(2, 128).unwrap();
        assert!(z2.intersects(&pi.pow_uint(2).mul_rational(&rat(1, 6))));
        let z3 = zeta_via_beta(3, 128).unwrap();
        assert!(z3.intersects(&zeta_series(3, 128).unwrap()));
        let z4 = zeta_via_beta(4, 128).unwrap();
        assert!(z4.intersects(&pi.pow_uint(4).mul_rational(&rat(1, 90))));
        assert!(zeta_via_beta(1, 64).is_err());
    }

    #[test]
    fn beta_odd_exact_reference_coefficients() {
        assert_eq!(beta_odd_exact(0).coeff, rat(1, 4));
        assert_eq!(beta_odd_exact(0).power, 1);
        assert_eq!(beta_odd_exact(1).coeff, rat(1, 32));
        assert_eq!(beta_odd_exact(2).coeff, rat(5, 1536));
        assert_eq!(beta_odd_exact(2).power, 5);
        assert_eq!(beta_odd_exact(3).coeff, rat(61, 184320));
        assert_eq!(beta_odd_exact(3).power, 7);
    }

    #[test]
    fn zeta_even_exact_small_values() {
        assert_eq!(zeta_even_exact(1).coeff, rat(1, 6));
        assert_eq!(zeta_even_exact(2).coeff, rat(1, 90));
        assert_eq!(zeta_even_exact(3).coeff, rat(1, 945));
        for s in 1..=4u32 {
            let ball = zeta_even_exact(s).to_ball(128);
            assert!(ball.intersects(&zeta_series(2 * s, 128).unwrap()), "s = {s}");
        }
    }

    #[test]
    fn uncorrected_even_zeta_fails_zeta_two() {
        let literal = zeta_even_exact_uncorrected(1).to_ball(128);
        let z2 = zeta_series(2, 128).unwrap();
        assert!(!literal.intersects(&z2));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_via_beta(2).unwrap().value, BigInt::from(-1));
        assert_eq!(euler_via_beta(6).unwrap().value, BigInt::from(-61));
        assert_eq!(euler_via_beta(8).unwrap().value, BigInt::from(1385));
        assert_eq!(euler_recurrence(0).unwrap().value, BigInt::one());
        assert_eq!(euler_recurrence(4).unwrap().value, BigInt::from(5));
        assert_eq!(euler_recurrence(10).unwrap().value, BigInt::from(-50521));
        assert!(euler_via_beta(7).is_err());
        assert!(euler_recurrence(3).is_err());
    }

    #[test]
    fn euler_routes_agree_and_signs_alternate() {
        for s in 0..=10u64 {
            let a = euler_via_beta(2 * s).unwrap();
            let b = euler_recurrence(2 * s).unwrap();
            assert_eq!(a, b, "2s = {}", 2 * s);
            if s % 2 == 0 {
                assert!(a.value.is_positive() || s == 0 && a.value.is_one());
            } else {
                assert!(a.value.is_negative());
            }
            if s >= 1 {
                assert!(num_integer::Integer::is_odd(&a.value), "|E_2s| odd, 2s = {}", 2 * s);
            }
        }
    }

    #[test]
    fn cot_poly_matches_scaled_euler_numbers() {
        for s in 1..=25u64 {
            let p = cot_derivative_poly(2 * s as usize).eval_at_one();
            let e = euler_recurrence(2 * s).unwrap().value.abs();
            assert_eq!(p, e << (2 * s), "s = {s}");
        }
    }

    #[test]
    fn beta_euler_rational_identity() {
        // beta(2s+1) (2 2^(2s+1) Gamma(2s+1)) / pi^(2s+1) = |E_2s| exactly
        for s in 0..=12u32 {
            let form = beta_odd_exact(s);
            let gamma = factorial(2 * s as u64);
            let lhs = &form.coeff * BigRational::from_integer(pow2(2 * s + 2) * gamma);
            let e = euler_recurrence(2 * s as u64).unwrap().value.abs();
            assert_eq!(lhs, BigRational::from_integer(e), "s = {s}");
        }
    }

    #[test]
    fn reflection_small_cases() {
        let r2 = reflection_check(2, 128).unwrap();
        assert!(r2.pass);
        assert_eq!(r2.identity, IdentityId::ReflectionOddDerivative);
        let r3 = reflection_check(3, 128).unwrap();
        assert!(r3.pass);
        assert_eq!(r3.identity, IdentityId::ReflectionEvenDerivative);
        let r7 = reflection_check(7, 128).unwrap();
        assert!(r7.pass);
        assert!(r7.residual_bound > BigRational::zero());
        assert!(reflection_check(1, 64).is_err());
    }

    #[test]
    fn verify_all_small_run_passes() {
        let reports = verify_all(5, 128);
        assert!(reports.iter().all(|r| r.pass));
        // deterministic ordering
        let mut sorted = reports.clone();
        sorted.sort_by_key(|r| (r.identity, r.s));
        for (a, b) in reports.iter().zip(sorted.iter()) {
            assert_eq!((a.identity, a.s), (b.identity, b.s));
        }
    }

    #[test]
    fn verify_all_includes_beta_one_at_low_precision() {
        let reports = verify_all(1, 64);
        assert!(reports
            .iter()
            .any(|r| r.identity == IdentityId::BetaViaPolygamma && r.s == 1 && r.pass));
        assert!(reports.iter().all(|r| r.pass));
    }

    #[test]
    fn odd_sum_restated_identity() {
        for s in 2..=12u32 {
            let lhs = odd_denominator_sum(s, 128).unwrap();
            let rhs = zeta_series(s, 128)
                .unwrap()
                .mul_rational(&BigRational::new(pow2(s) - 1, pow2(s)));
            assert!(lhs.intersects(&rhs), "s = {s}");
        }
    }
}
