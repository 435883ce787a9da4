//! Integers and rationals backed by `num-bigint` / `num-rational`.

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Domain, Field, Polynomial, Ring};
use crate::error::ArithError;

/// Exact rational number; always stored reduced with a positive denominator.
pub type Rational = BigRational;

impl Ring for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn leading_sign(&self) -> Ordering {
        self.sign_ordering()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl Domain for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn leading_sign(&self) -> Ordering {
        self.numer().sign_ordering()
    }
}

impl Domain for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Field for BigRational {
    type Integral = BigInt;

    fn common_denominator(xs: &[Self]) -> Self {
        let l = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        BigRational::from_integer(l)
    }

    fn to_integral(&self) -> BigInt {
        assert!(self.is_integer(), "{self} is not an integer");
        self.numer().clone()
    }

    fn from_integral(x: &BigInt) -> Self {
        BigRational::from_integer(x.clone())
    }

    fn content_factor(xs: &[Self]) -> Self {
        let l = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let g = xs
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(&(x.numer() * (&l / x.denom()))));
        if g.is_zero() {
            BigRational::one()
        } else {
            BigRational::new(l, g)
        }
    }

    fn integer_roots(p: &Polynomial<Self>) -> Vec<i64> {
        let Some(v) = p.valuation() else {
            return Vec::new();
        };
        let q = p.shift_down(v);
        let c = Self::content_factor(q.coeffs());
        let ints: Vec<BigInt> = q.coeffs().iter().map(|x| (x * &c).to_integer()).collect();
        let lead = ints.last().expect("nonzero").abs();
        let bound = ints[..ints.len() - 1]
            .iter()
            .map(|a| a.abs().div_ceil(&lead))
            .max()
            .unwrap_or_else(BigInt::zero)
            + BigInt::one();
        let bound: i64 = bound.try_into().expect("integer root bound fits in i64");
        let tail = ints[0].clone();
        let mut roots: Vec<i64> = Vec::new();
        for n in 1..=bound {
            if !(&tail % BigInt::from(n)).is_zero() {
                continue;
            }
            for x in [-n, n] {
                if q.eval(&int(x)).is_zero() {
                    roots.push(x);
                }
            }
        }
        if v > 0 {
            roots.push(0);
        }
        roots.sort_unstable();
        roots
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let t = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    match t.split_once('/') {
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn rational_pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        super::pow(x, e as u32)
    } else {
        super::pow(&x.recip(), (-e) as u32)
    }
}
