//! Exact arithmetic kernel.
//!
//! Everything above this module is written against the [`Ring`], [`Domain`]
//! and [`Field`] traits so the same code runs over `ℚ`, `ℚ(ℏ)` and nested
//! fraction fields such as `ℚ(ℏ)(n)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub mod laurent;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod rational;

pub use laurent::{LaurentSeries, Precision};
pub use linalg::{nullspace, nullspace_field, rank};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;

/// A commutative ring with unit.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Image of an integer under the canonical map `ℤ → R`.
    fn from_int(n: i64) -> Self;

    /// Sign of the "leading" rational coefficient, used to pick canonical
    /// representatives up to sign. Zero maps to `Equal`.
    fn leading_sign(&self) -> Ordering;

    fn is_negative_lead(&self) -> bool {
        self.leading_sign() == Ordering::Less
    }
}

/// An integral domain in which exact division can be carried out.
pub trait Domain: Ring {
    /// Returns `self / rhs` when the quotient exists in the domain.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

/// A field of characteristic zero, presented as the fraction field of an
/// [`Domain`] so that elimination can run fraction-free.
pub trait Field: Domain + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    type Integral: Domain;

    fn inv(&self) -> Self {
        Self::one() / self
    }

    /// A nonzero multiplier `c` such that `c * x` is integral for every `x`.
    fn common_denominator(xs: &[Self]) -> Self;

    /// Projection of an integral element. Panics if `self` is not integral.
    fn to_integral(&self) -> Self::Integral;

    fn from_integral(x: &Self::Integral) -> Self;

    /// A nonzero `c` such that every `c * x` is integral and the entries
    /// share no common factor.
    fn content_factor(xs: &[Self]) -> Self;

    /// Integer roots of a nonzero polynomial, in increasing order.
    fn integer_roots(p: &Polynomial<Self>) -> Vec<i64>;
}

/// Scales `xs` to be integral and content-free, with the first nonzero entry
/// having positive leading sign.
pub fn normalize_vector<F: Field>(xs: &[F]) -> Vec<F> {
    if xs.iter().all(|x| x.is_zero()) {
        return xs.to_vec();
    }
    let mut c = F::content_factor(xs);
    let first = xs.iter().find(|x| !x.is_zero()).expect("nonzero entry");
    if (first.clone() * &c).is_negative_lead() {
        c = -c;
    }
    xs.iter().map(|x| x.clone() * &c).collect()
}

pub(crate) fn pow<R: Ring>(base: &R, exp: u32) -> R {
    let mut acc = R::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &b;
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * &b;
        }
    }
    acc
}
