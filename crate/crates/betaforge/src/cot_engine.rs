//! Exact symbolic engine for derivatives of cot(pi z).
//!
//! With c = cot(pi z), d/dz cot(pi z) = -pi (1 + c^2), so the k-th
//! derivative is pi^k * P_k(c) where P_0 = c and
//! P_{k+1}(c) = -(1 + c^2) P_k'(c), an integer-coefficient recurrence.
//! Only the evaluation at z = 1/4 (c = 1) is ever needed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer-coefficient polynomial P_k with deg P_k = k + 1.
///
/// `coeffs[i]` is the coefficient of c^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotPolynomial {
    order: usize,
    coeffs: Vec<BigInt>,
}

/// Formal derivative of a dense coefficient vector.
pub fn poly_derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    if coeffs.len() <= 1 {
        return vec![BigInt::zero()];
    }
    coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, a)| a * (i as u64 + 1))
        .collect()
}

/// The recurrence map q |-> -(1 + c^2) q' on raw coefficient vectors,
/// independent of any order bookkeeping.
pub fn derive_step(coeffs: &[BigInt]) -> Vec<BigInt> {
    let d = poly_derivative(coeffs);
    let mut out = vec![BigInt::zero(); d.len() + 2];
    for (i, a) in d.iter().enumerate() {
        out[i] -= a;
        out[i + 2] -= a;
    }
    while out.len() > 1 && out.last().map(Zero::is_zero).unwrap_or(false) {
        out.pop();
    }
    out
}

impl CotPolynomial {
    /// P_0 = c.
    pub fn base() -> Self {
        CotPolynomial {
            order: 0,
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Order-(k+1) successor under P_{k+1} = -(1 + c^2) P_k'.
    pub fn derive_next(&self) -> Self {
        CotPolynomial {
            order: self.order + 1,
            coeffs: derive_step(&self.coeffs),
        }
    }

    /// Exact evaluation at c = cot(pi/4) = 1: the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// P_k by iterating the recurrence from P_0 = c.
pub fn cot_derivative_poly(k: usize) -> CotPolynomial {
    let mut p = CotPolynomial::base();
    for _ in 0..k {
        p = p.derive_next();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric_core::factorial;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_derivative() {
        // P_0 = c -> P_1 = -1 - c^2
        let p1 = CotPolynomial::base().derive_next();
        assert_eq!(p1.coeffs(), &ints(&[-1, 0, -1])[..]);
    }

    #[test]
    fn second_derivative_matches_hand_expansion() {
        // 2c + 2c^3
        let p2 = cot_derivative_poly(2);
        assert_eq!(p2.coeffs(), &ints(&[0, 2, 0, 2])[..]);
    }

    #[test]
    fn third_derivative_matches_symbolic_oracle() {
        // oracle: hand symbolic differentiation of -(2c + 2c^3)... frozen
        let p3 = cot_derivative_poly(3);
        assert_eq!(p3.coeffs(), &ints(&[-2, 0, -8, 0, -6])[..]);
    }

    #[test]
    fn eval_at_one_small_orders() {
        assert_eq!(cot_derivative_poly(0).eval_at_one(), BigInt::from(1));
        assert_eq!(cot_derivative_poly(1).eval_at_one(), BigInt::from(-2));
        assert_eq!(cot_derivative_poly(4).eval_at_one(), BigInt::from(80));
        assert_eq!(cot_derivative_poly(6).eval_at_one(), BigInt::from(3904));
        // 2^8 * 1385
        assert_eq!(cot_derivative_poly(8).eval_at_one(), BigInt::from(354560));
    }

    #[test]
    fn structural_invariants_up_to_60() {
        let mut p = CotPolynomial::base();
        for k in 0..=60usize {
            assert_eq!(p.order(), k);
            assert_eq!(p.degree(), k + 1, "degree at k = {k}");
            let lead = p.coeffs().last().unwrap();
            let expect = if k % 2 == 0 {
                factorial(k as u64)
            } else {
                -factorial(k as u64)
            };
            assert_eq!(lead, &expect, "leading coefficient at k = {k}");
            for (i, a) in p.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                assert_eq!(i % 2, (k + 1) % 2, "parity at k = {k}, power {i}");
                assert_eq!(a.is_negative(), k % 2 == 1, "sign at k = {k}, power {i}");
            }
            p = p.derive_next();
        }
    }

    proptest! {
        #[test]
        fn derive_step_is_linear(
            p in prop::collection::vec(-20i64..20, 1..8),
            q in prop::collection::vec(-20i64..20, 1..8),
            a in -5i64..5,
            b in -5i64..5,
        ) {
            let n = p.len().max(q.len());
            let mut combo = vec![BigInt::zero(); n];
            for (i, x) in p.iter().enumerate() { combo[i] += a * x; }
            for (i, x) in q.iter().enumerate() { combo[i] += b * x; }
            let lhs = derive_step(&combo);
            let dp = derive_step(&ints(&p));
            let dq = derive_step(&ints(&q));
            let m = lhs.len().max(dp.len()).max(dq.len());
            let mut rhs = vec![BigInt::zero(); m];
            for (i, x) in dp.iter().enumerate() { rhs[i] += x * a; }
            for (i, x) in dq.iter().enumerate() { rhs[i] += x * b; }
            let mut lhs_padded = lhs.clone();
            lhs_padded.resize(m, BigInt::zero());
            prop_assert_eq!(lhs_padded, rhs);
        }
    }
}
