//! Dense univariate polynomials over an arbitrary [`Ring`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Domain, Field, Ring};
use crate::error::ArithError;

/// Coefficients are stored lowest degree first; the last stored coefficient
/// is never zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `x + c`
    pub fn linear(c: R) -> Self {
        Self::new(vec![c, R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at an element of an extension `S` reached through `lift`.
    pub fn eval_with<S: Ring>(&self, x: &S, lift: impl Fn(&R) -> S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x + &lift(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// `p(c·x)`
    pub fn scale_var(&self, c: &R) -> Self {
        let mut pw = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &pw);
            pw = pw * c;
        }
        Self::new(out)
    }

    /// `x^k · p(x)`
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Drops the lowest `k` coefficients (division by `x^k` when exact).
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `p(x + c)`, by Horner's scheme on the shifted variable.
    pub fn taylor_shift(&self, c: &R) -> Self {
        let lin = Self::linear(c.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| acc * &lin + &Self::constant(a.clone()))
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| acc * inner + &Self::constant(a.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.clone() * &R::from_int(k as i64))
                .collect(),
        )
    }

    pub fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = format!("{c}");
            let compound = s.contains(['+', ' ']) || s[1..].contains('-');
            let (neg, body) = if !compound && s.starts_with('-') {
                (true, s[1..].to_string())
            } else {
                (false, s)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let body = if compound { format!("({body})") } else { body };
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    write!(f, "{var}")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a, R>(&'a Polynomial<R>, &'a str);
        impl<R: Ring> fmt::Display for D<'_, R> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_var(f, self.1)
            }
        }
        D(self, var)
    }
}

impl<F: Field> Polynomial<F> {
    /// Euclidean division; `divisor` must be nonzero.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        let lc = divisor.leading().ok_or(ArithError::DivisionByZero)?;
        let lc_inv = lc.inv();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = rem[k - dd + i].clone() - c.clone() * d;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return if self.is_zero() { other.monic() } else { self.monic() };
        }
        let (va, vb) = (self.valuation().unwrap_or(0), other.valuation().unwrap_or(0));
        if va > 0 || vb > 0 {
            let (a, b) = (self.shift_down(va), other.shift_down(vb));
            let g = if a.is_constant() || b.is_constant() {
                Self::one()
            } else {
                a.gcd(&b)
            };
            return g.shift_up(va.min(vb));
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.divmod(&g).expect("nonzero gcd");
        (q * other).monic()
    }
}

impl<R: Ring> Zero for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Polynomial<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

fn add_slices<R: Ring>(a: &[R], b: &[R], negate_b: bool) -> Vec<R> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k);
        let y = b.get(k);
        out.push(match (x, y, negate_b) {
            (Some(x), Some(y), false) => x.clone() + y,
            (Some(x), Some(y), true) => x.clone() - y,
            (Some(x), None, _) => x.clone(),
            (None, Some(y), false) => y.clone(),
            (None, Some(y), true) => -y.clone(),
            (None, None, _) => R::zero(),
        });
    }
    out
}

fn mul_slices<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = std::mem::replace(&mut out[i + j], R::zero()) + &(x.clone() * y);
        }
    }
    out
}

impl<R: Ring> Add for Polynomial<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<'a, R: Ring> Add<&'a Polynomial<R>> for Polynomial<R> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        Self::new(add_slices(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<R: Ring> Sub for Polynomial<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self - &rhs
    }
}

impl<'a, R: Ring> Sub<&'a Polynomial<R>> for Polynomial<R> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        Self::new(add_slices(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<R: Ring> Mul for Polynomial<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<'a, R: Ring> Mul<&'a Polynomial<R>> for Polynomial<R> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        Self::new(mul_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }

    fn leading_sign(&self) -> Ordering {
        self.leading().map_or(Ordering::Equal, |c| c.leading_sign())
    }
}

impl<R: Domain> Domain for Polynomial<R> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let lc = rhs.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = rhs.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = rem[k].div_exact(lc)?;
            for (i, d) in rhs.coeffs.iter().enumerate() {
                rem[k - dd + i] = rem[k - dd + i].clone() - c.clone() * d;
            }
            quot[k - dd] = c;
        }
        rem[..dd].iter().all(|c| c.is_zero()).then(|| Self::new(quot))
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, "x")
    }
}

impl<R: Ring> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{self}]")
    }
}
