//! Closed forms for 1-part simple and monotone Hurwitz numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::rational::{binomial, factorial, int, Rational};
use crate::arith::{pow, RationalFunction};
use crate::error::GeneratorError;
use crate::{Kh, QPoly};

/// `h_g(d) = (d/2)^{d+2g-1} / (d! (d+2g-1)!) Σ_k (-1)^k C(d-1,k) (d-1-2k)^{d+2g-1}`.
pub fn closed_form_hurwitz(d: i64, g: i64) -> Rational {
    assert!(d >= 1 && g >= 0);
    let e = (d + 2 * g - 1) as u32;
    let mut sum = BigInt::zero();
    for k in 0..d {
        let t = binomial(d - 1, k) * pow(&BigInt::from(d - 1 - 2 * k), e);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    let half_d = pow(&Rational::new(d.into(), 2.into()), e);
    half_d * Rational::new(sum, factorial(d as u64) * factorial(e as u64))
}

fn catalan_prefactor(d: i64) -> Rational {
    Rational::new(
        factorial((2 * d - 2) as u64),
        factorial(d as u64) * factorial((d - 1) as u64),
    )
}

/// `Σ_{k_1+…+k_{d-1}=g} Π i^{2k_i}` over weak compositions of `g`.
pub fn monotone_composition_sum(d: i64, g: i64) -> BigInt {
    fn go(i: i64, last: i64, left: i64) -> BigInt {
        if i > last {
            return if left == 0 { BigInt::one() } else { BigInt::zero() };
        }
        let sq = BigInt::from(i * i);
        let mut acc = BigInt::zero();
        let mut w = BigInt::one();
        for k in 0..=left {
            acc += &w * go(i + 1, last, left - k);
            w *= &sq;
        }
        acc
    }
    go(1, d - 1, g)
}

/// `Σ_{1 ≤ m_1 ≤ … ≤ m_g ≤ d-1} (m_1 ⋯ m_g)^2`.
pub fn monotone_tuple_sum(d: i64, g: i64) -> BigInt {
    fn go(lo: i64, hi: i64, left: i64) -> BigInt {
        if left == 0 {
            return BigInt::one();
        }
        (lo..=hi).map(|m| BigInt::from(m * m) * go(m, hi, left - 1)).sum()
    }
    go(1, d - 1, g)
}

/// `m_g(d)` from both sums, which must agree.
pub fn closed_form_monotone(d: i64, g: i64) -> Result<Rational, GeneratorError> {
    assert!(d >= 1 && g >= 0);
    let a = monotone_composition_sum(d, g);
    let b = monotone_tuple_sum(d, g);
    if a != b {
        return Err(GeneratorError::ClosedFormMismatch { d, g });
    }
    Ok(catalan_prefactor(d) * Rational::from_integer(a))
}

/// `C_{d-1} Π_{k=-d+1}^{d-1} 1/(1 - kℏ)`, the product form of the monotone
/// 1-point series up to a power of `ℏ`.
pub fn monotone_product_form(d: i64) -> Kh {
    let mut den = QPoly::one();
    for k in -(d - 1)..=(d - 1) {
        den = den * QPoly::new(vec![int(1), int(-k)]);
    }
    RationalFunction::new(QPoly::constant(catalan_prefactor(d)), den).expect("nonzero product")
}
