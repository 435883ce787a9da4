//! Laurent series in one variable, either exact (Laurent polynomials) or
//! truncated at a fixed exclusive order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Polynomial, RationalFunction, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Precision {
    Exact,
    /// Coefficients are known for exponents strictly below this order.
    Truncated(i64),
}

impl Precision {
    fn min(self, other: Precision) -> Precision {
        match (self, other) {
            (Precision::Exact, p) | (p, Precision::Exact) => p,
            (Precision::Truncated(a), Precision::Truncated(b)) => Precision::Truncated(a.min(b)),
        }
    }

    fn shift(self, by: i64) -> Precision {
        match self {
            Precision::Exact => Precision::Exact,
            Precision::Truncated(o) => Precision::Truncated(o + by),
        }
    }
}

/// `Σ_{k} coeffs[k] · x^{valuation + k}`.
///
/// A truncated zero series stores `valuation == order` and no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries<F> {
    valuation: i64,
    coeffs: Vec<F>,
    precision: Precision,
}

impl<F: Ring> LaurentSeries<F> {
    pub fn new(valuation: i64, coeffs: Vec<F>, precision: Precision) -> Self {
        let mut s = LaurentSeries {
            valuation,
            coeffs,
            precision,
        };
        s.normalize();
        s
    }

    pub fn exact(valuation: i64, coeffs: Vec<F>) -> Self {
        Self::new(valuation, coeffs, Precision::Exact)
    }

    pub fn monomial(c: F, exp: i64) -> Self {
        Self::exact(exp, vec![c])
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// The zero series known up to (excluding) `order`.
    pub fn zero_to(order: i64) -> Self {
        LaurentSeries {
            valuation: order,
            coeffs: Vec::new(),
            precision: Precision::Truncated(order),
        }
    }

    fn normalize(&mut self) {
        if let Precision::Truncated(o) = self.precision {
            let keep = (o - self.valuation).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.valuation = match self.precision {
                    Precision::Exact => 0,
                    Precision::Truncated(o) => o,
                };
            }
            Some(k) => {
                self.coeffs.drain(..k);
                self.valuation += k as i64;
                while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                    self.coeffs.pop();
                }
            }
        }
    }

    /// Lowest exponent with a nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.valuation)
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn order(&self) -> Option<i64> {
        match self.precision {
            Precision::Exact => None,
            Precision::Truncated(o) => Some(o),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.precision == Precision::Exact
    }

    /// Coefficient of `x^e`. Panics if `e` is beyond the truncation order.
    pub fn coeff(&self, e: i64) -> F {
        if let Precision::Truncated(o) = self.precision {
            assert!(e < o, "coefficient x^{e} is beyond truncation order {o}");
        }
        let k = e - self.valuation;
        if k < 0 || k as usize >= self.coeffs.len() {
            F::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        let v = self.valuation;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (v + k as i64, c))
    }

    /// Highest exponent carrying a stored coefficient.
    pub fn top_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.valuation + self.coeffs.len() as i64 - 1)
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self::new(
            self.valuation,
            self.coeffs.clone(),
            self.precision.min(Precision::Truncated(order)),
        )
    }

    pub fn mul_monomial(&self, exp: i64) -> Self {
        LaurentSeries {
            valuation: self.valuation + exp,
            coeffs: self.coeffs.clone(),
            precision: self.precision.shift(exp),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(
            self.valuation,
            self.coeffs.iter().map(|x| x.clone() * c).collect(),
            self.precision,
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&F) -> S) -> LaurentSeries<S> {
        LaurentSeries::new(self.valuation, self.coeffs.iter().map(f).collect(), self.precision)
    }

    /// Laurent polynomial from an ordinary polynomial.
    pub fn from_poly(p: &Polynomial<F>) -> Self {
        Self::exact(0, p.coeffs().to_vec())
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let precision = self.precision.min(rhs.precision);
        if self.coeffs.is_empty() && rhs.coeffs.is_empty() {
            return Self::new(0, Vec::new(), precision);
        }
        let lo = match (self.valuation(), rhs.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        let hi = self.top_exponent().into_iter().chain(rhs.top_exponent()).max().unwrap();
        let hi = match precision {
            Precision::Exact => hi,
            Precision::Truncated(o) => hi.min(o - 1),
        };
        let mut coeffs = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        for e in lo..=hi {
            let a = self.raw(e);
            let b = rhs.raw(e);
            coeffs.push(if negate { a - b } else { a + b });
        }
        Self::new(lo, coeffs, precision)
    }

    fn raw(&self, e: i64) -> F {
        let k = e - self.valuation;
        if k < 0 || k as usize >= self.coeffs.len() {
            F::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let va = self.valuation;
        let vb = rhs.valuation;
        let precision = self.precision.shift(vb).min(rhs.precision.shift(va));
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(va + vb, Vec::new(), precision);
        }
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Precision::Truncated(o) = precision {
            len = len.min((o - va - vb).max(0) as usize);
        }
        let mut coeffs = vec![F::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], F::zero()) + &(a.clone() * b);
            }
        }
        Self::new(va + vb, coeffs, precision)
    }
}

impl<F: Field> LaurentSeries<F> {
    /// Expansion of a rational function at the origin, with exponents below
    /// `order`.
    pub fn expand(f: &RationalFunction<F>, order: i64) -> Self {
        let num = f.num();
        let den = f.den();
        let (Some(vn), Some(vd)) = (num.valuation(), den.valuation()) else {
            return Self::zero_to(order);
        };
        let valuation = vn as i64 - vd as i64;
        let len = (order - valuation).max(0) as usize;
        let n = num.shift_down(vn);
        let d = den.shift_down(vd);
        let d0_inv = d.coeff(0).inv();
        let mut out: Vec<F> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = n.coeff(k);
            for j in 1..=k.min(d.deg().max(0) as usize) {
                acc = acc - d.coeff(j) * &out[k - j];
            }
            out.push(acc * &d0_inv);
        }
        Self::new(valuation, out, Precision::Truncated(order))
    }

    /// The exact Laurent polynomial as an element of `F(x)`.
    pub fn to_rational_function(&self) -> Option<RationalFunction<F>> {
        if !self.is_exact() {
            return None;
        }
        if self.coeffs.is_empty() {
            return Some(RationalFunction::zero());
        }
        let v = self.valuation;
        let body = Polynomial::new(self.coeffs.clone());
        Some(if v >= 0 {
            RationalFunction::from_poly(body.shift_up(v as usize))
        } else {
            RationalFunction::from_poly(body) * &RationalFunction::var_pow(v)
        })
    }

    /// `exp(c·x)` known below `order`.
    pub fn exp_linear(c: &F, order: i64) -> Self {
        if order <= 0 {
            return Self::zero_to(order);
        }
        let mut coeffs = Vec::with_capacity(order as usize);
        let mut term = F::one();
        for k in 0..order {
            coeffs.push(term.clone());
            term = term * c / F::from_int(k + 1);
        }
        Self::new(0, coeffs, Precision::Truncated(order))
    }
}

impl<F: Ring> Zero for LaurentSeries<F> {
    fn zero() -> Self {
        Self::exact(0, Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Ring> One for LaurentSeries<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Ring> Add for LaurentSeries<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs, false)
    }
}

impl<'a, F: Ring> Add<&'a LaurentSeries<F>> for LaurentSeries<F> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self.add_impl(rhs, false)
    }
}

impl<F: Ring> Sub for LaurentSeries<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_impl(&rhs, true)
    }
}

impl<'a, F: Ring> Sub<&'a LaurentSeries<F>> for LaurentSeries<F> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self.add_impl(rhs, true)
    }
}

impl<F: Ring> Mul for LaurentSeries<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<'a, F: Ring> Mul<&'a LaurentSeries<F>> for LaurentSeries<F> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self.mul_impl(rhs)
    }
}

impl<F: Ring> Neg for LaurentSeries<F> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }
}

impl<F: Ring> Ring for LaurentSeries<F> {
    fn from_int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }

    fn leading_sign(&self) -> std::cmp::Ordering {
        self.coeffs
            .first()
            .map_or(std::cmp::Ordering::Equal, |c| c.leading_sign())
    }
}

impl<F: Ring> fmt::Display for LaurentSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match e {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    if e == 1 {
                        write!(f, "h")?;
                    } else {
                        write!(f, "h^{e}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Precision::Truncated(o) = self.precision {
            write!(f, " + O(h^{o})")?;
        }
        Ok(())
    }
}

impl<F: Ring> fmt::Debug for LaurentSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries[{self}]")
    }
}
