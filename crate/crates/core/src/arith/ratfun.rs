//! Fraction field `F(x)` of a polynomial ring over a field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Domain, Field, Polynomial, Ring};
use crate::error::ArithError;

/// Canonical quotient `num / den`: coprime, `den` monic and nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.divmod(&g).expect("gcd is nonzero").0,
                den.divmod(&g).expect("gcd is nonzero").0,
            )
        };
        Self::normalize_unit(num, den)
    }

    /// Makes the denominator monic; assumes `num` and `den` are coprime.
    fn normalize_unit(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.inv();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The transcendental generator.
    pub fn var() -> Self {
        Self::from_poly(Polynomial::x())
    }

    /// `x^k` for any integer `k`.
    pub fn var_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Polynomial::monomial(F::one(), k as usize))
        } else {
            RationalFunction {
                num: Polynomial::one(),
                den: Polynomial::monomial(F::one(), (-k) as usize),
            }
        }
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<F> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.clone() * &rhs.inv_unchecked())
    }

    fn inv_unchecked(&self) -> Self {
        Self::normalize_unit(self.den.clone(), self.num.clone())
    }

    /// Value at a point of the base field; `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// `f(x + c)`
    pub fn taylor_shift(&self, c: &F) -> Self {
        Self::normalize_unit(self.num.taylor_shift(c), self.den.taylor_shift(c))
    }

    /// `f(c·x)` for nonzero `c`.
    pub fn scale_var(&self, c: &F) -> Self {
        Self::normalize_unit(self.num.scale_var(c), self.den.scale_var(c))
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative() * &self.den - self.num.clone() * &self.den.derivative();
        Self::reduce(n, self.den.clone() * &self.den)
    }

    pub fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.den.is_one() {
            self.num.fmt_var(f, var)
        } else {
            write!(f, "({})/({})", self.num.display_var(var), self.den.display_var(var))
        }
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a, F>(&'a RationalFunction<F>, &'a str);
        impl<F: Field> fmt::Display for D<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_var(f, self.1)
            }
        }
        D(self, var)
    }
}

impl<F: Field> From<Polynomial<F>> for RationalFunction<F> {
    fn from(p: Polynomial<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Field> Zero for RationalFunction<F> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RationalFunction<F> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl<F: Field> RationalFunction<F> {
    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rn = if negate { -rhs.num.clone() } else { rhs.num.clone() };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return RationalFunction {
                num: rn,
                den: rhs.den.clone(),
            };
        }
        if self.den == rhs.den {
            return Self::reduce(self.num.clone() + &rn, self.den.clone());
        }
        if self.den.is_one() {
            return Self::normalize_unit(self.num.clone() * &rhs.den + &rn, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return Self::normalize_unit(self.num.clone() + &(rn * &self.den), self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = self.num.clone() * &rhs.den + &(rn * &self.den);
            return Self::normalize_unit(num, self.den.clone() * &rhs.den);
        }
        let da = self.den.divmod(&g).expect("nonzero").0;
        let db = rhs.den.divmod(&g).expect("nonzero").0;
        let num = self.num.clone() * &db + &(rn * &da);
        let den = da * &rhs.den;
        // any common factor of num and den divides g
        let h = num.gcd(&g);
        if h.is_one() || num.is_zero() {
            if num.is_zero() {
                return Self::zero();
            }
            Self::normalize_unit(num, den)
        } else {
            Self::normalize_unit(num.divmod(&h).expect("nonzero").0, den.divmod(&h).expect("nonzero").0)
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let cancel = |a: &Polynomial<F>, b: &Polynomial<F>| {
            if a.is_constant() || b.is_constant() {
                (a.clone(), b.clone())
            } else {
                let g = a.gcd(b);
                if g.is_one() {
                    (a.clone(), b.clone())
                } else {
                    (a.divmod(&g).expect("nonzero").0, b.divmod(&g).expect("nonzero").0)
                }
            }
        };
        let (an, bd) = cancel(&self.num, &rhs.den);
        let (bn, ad) = cancel(&rhs.num, &self.den);
        Self::normalize_unit(an * &bn, ad * &bd)
    }
}

impl<F: Field> Add for RationalFunction<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs, false)
    }
}

impl<'a, F: Field> Add<&'a RationalFunction<F>> for RationalFunction<F> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self.add_impl(rhs, false)
    }
}

impl<F: Field> Sub for RationalFunction<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_impl(&rhs, true)
    }
}

impl<'a, F: Field> Sub<&'a RationalFunction<F>> for RationalFunction<F> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self.add_impl(rhs, true)
    }
}

impl<F: Field> Mul for RationalFunction<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<'a, F: Field> Mul<&'a RationalFunction<F>> for RationalFunction<F> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self.mul_impl(rhs)
    }
}

impl<F: Field> Div for RationalFunction<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero rational function")
    }
}

impl<'a, F: Field> Div<&'a RationalFunction<F>> for RationalFunction<F> {
    type Output = Self;
    fn div(self, rhs: &'a Self) -> Self {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl<F: Field> Neg for RationalFunction<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Ring for RationalFunction<F> {
    fn from_int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }

    fn leading_sign(&self) -> Ordering {
        self.num.leading_sign()
    }
}

impl<F: Field> Domain for RationalFunction<F> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
}

impl<F: Field> Field for RationalFunction<F> {
    type Integral = Polynomial<F::Integral>;

    fn common_denominator(xs: &[Self]) -> Self {
        let l = xs.iter().fold(Polynomial::<F>::one(), |acc, x| {
            if x.den.is_one() {
                acc
            } else {
                acc.lcm(&x.den)
            }
        });
        let mut coeffs = Vec::new();
        for x in xs {
            let cleared = if x.den == l {
                x.num.clone()
            } else {
                x.num.clone() * &l.divmod(&x.den).expect("nonzero").0
            };
            coeffs.extend(cleared.into_coeffs());
        }
        let c = F::common_denominator(&coeffs);
        Self::from_poly(l.scale(&c))
    }

    fn to_integral(&self) -> Self::Integral {
        assert!(self.den.is_one(), "rational function is not a polynomial");
        self.num.map(|c| c.to_integral())
    }

    fn from_integral(x: &Self::Integral) -> Self {
        Self::from_poly(x.map(F::from_integral))
    }

    fn content_factor(xs: &[Self]) -> Self {
        let l = xs.iter().fold(Polynomial::<F>::one(), |acc, x| {
            if x.den.is_one() {
                acc
            } else {
                acc.lcm(&x.den)
            }
        });
        let cleared: Vec<Polynomial<F>> = xs
            .iter()
            .map(|x| x.num.clone() * &l.divmod(&x.den).expect("nonzero").0)
            .collect();
        let g = cleared.iter().fold(Polynomial::<F>::zero(), |acc, p| acc.gcd(p));
        if g.is_zero() {
            return Self::one();
        }
        let flat: Vec<F> = cleared
            .iter()
            .flat_map(|p| p.divmod(&g).expect("nonzero").0.into_coeffs())
            .collect();
        let c = F::content_factor(&flat);
        Self::reduce(l.scale(&c), g)
    }

    fn integer_roots(p: &Polynomial<Self>) -> Vec<i64> {
        // clear denominators, then any nonzero x-coefficient slice over F
        // bounds the candidates
        let c = Self::content_factor(p.coeffs());
        let cleared: Vec<Polynomial<F>> = p.coeffs().iter().map(|x| (x.clone() * &c).num).collect();
        let top = cleared.iter().map(Polynomial::deg).max().unwrap_or(-1);
        for j in 0..=top.max(0) as usize {
            let slice = Polynomial::new(cleared.iter().map(|q| q.coeff(j)).collect());
            if !slice.is_zero() {
                return F::integer_roots(&slice)
                    .into_iter()
                    .filter(|&n| p.eval(&Self::from_int(n)).is_zero())
                    .collect();
            }
        }
        Vec::new()
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, "h")
    }
}

impl<F: Field> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{self}]")
    }
}
