//! 1-point series `n(d) = Σ_g n_g(d) ℏ^{2g-1}` of weighted Hurwitz problems
//! and the catalog of named problems.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::rational::{format_rational, int, parse_rational};
use crate::arith::RationalFunction;
use crate::error::GeneratorError;
use crate::symfunc::WeightVector;
use crate::{Kh, QPoly};

pub mod closed;
mod series;

pub use closed::{
    closed_form_hurwitz, closed_form_monotone, monotone_composition_sum, monotone_product_form, monotone_tuple_sum,
};
pub use series::{
    content_product, invariants, one_point_series, one_point_series_factored, one_point_series_simple,
    wave_coefficients, InvariantTable, OnePointSeries, SeriesValue,
};

/// The weight generating function `G(z)` with `G(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeightFunction {
    /// `num(z) / den(z)`, stored reduced with `den(0) = 1`.
    Rational {
        num: QPoly,
        den: QPoly,
    },
    Exponential,
}

impl WeightFunction {
    pub fn rational(num: QPoly, den: QPoly) -> Result<Self, GeneratorError> {
        let f = RationalFunction::new(num, den)?;
        let d0 = f.den().coeff(0);
        if d0.is_zero() || f.num().coeff(0) != d0 {
            return Err(GeneratorError::WeightNotNormalized);
        }
        let inv = d0.recip();
        Ok(WeightFunction::Rational {
            num: f.num().scale(&inv),
            den: f.den().scale(&inv),
        })
    }

    pub fn polynomial(p: QPoly) -> Result<Self, GeneratorError> {
        Self::rational(p, QPoly::one())
    }

    /// `(1 + z)^m`
    pub fn one_plus_z_pow(m: u32) -> Self {
        let p = crate::arith::pow(&QPoly::linear(int(1)), m);
        WeightFunction::Rational {
            num: p,
            den: QPoly::one(),
        }
    }

    /// `1 / (1 - z)`
    pub fn geometric() -> Self {
        WeightFunction::Rational {
            num: QPoly::one(),
            den: QPoly::new(vec![int(1), int(-1)]),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, WeightFunction::Rational { .. })
    }

    /// `G(c·ℏ)` as an element of `ℚ(ℏ)`.
    pub fn at_multiple(&self, c: i64) -> Result<Kh, GeneratorError> {
        match self {
            WeightFunction::Rational { num, den } => {
                if c == 0 {
                    return Ok(Kh::one());
                }
                let c = int(c);
                Ok(RationalFunction::new(num.scale_var(&c), den.scale_var(&c))?)
            }
            WeightFunction::Exponential => Err(GeneratorError::ExponentialUnsupported),
        }
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFunction::Exponential => write!(f, "exp(z)"),
            WeightFunction::Rational { num, den } if den.is_one() => write!(f, "{}", num.display_var("z")),
            WeightFunction::Rational { num, den } => {
                write!(f, "({})/({})", num.display_var("z"), den.display_var("z"))
            }
        }
    }
}

/// A weighted Hurwitz problem: weight function `G` and weight vector `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    pub name: Option<String>,
    pub weight: WeightFunction,
    pub q: WeightVector,
}

impl ProblemSpec {
    pub fn new(weight: WeightFunction, q: WeightVector) -> Self {
        ProblemSpec { name: None, weight, q }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn is_rational(&self) -> bool {
        self.weight.is_rational()
    }

    /// `gcd{k : q_k ≠ 0}`; `n(d)` vanishes unless the stride divides `d`.
    pub fn stride(&self) -> usize {
        self.q.support().fold(0usize, |acc, k| acc.gcd(&k)).max(1)
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| {
            let q: Vec<String> = self.q.entries().iter().map(format_rational).collect();
            format!("G={}, q=({})", self.weight, q.join(","))
        })
    }
}

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] = &[
    "ribbon",
    "hypermap(m)",
    "dessin",
    "double-dessin(q1,...,qr)",
    "bms(m)",
    "double-bms(m;q1,...,qr)",
    "hurwitz",
    "double-hurwitz(q1,...,qr)",
    "monotone",
    "double-monotone(q1,...,qr)",
];

/// Looks up a named problem, e.g. `ribbon`, `hypermap(3)`, `double-bms(3;0,0,1)`.
///
/// `m-hypermap` and `m-bms` are accepted as aliases of `hypermap(m)` and
/// `bms(m)`.
pub fn catalog(name: &str) -> Result<ProblemSpec, GeneratorError> {
    let unknown = || GeneratorError::UnknownProblem(name.to_string());
    let s = name.trim();
    let (base, args) = match s.find('(') {
        Some(i) => {
            let inner = s[i + 1..].strip_suffix(')').ok_or_else(unknown)?;
            (&s[..i], Some(inner))
        }
        None => (s, None),
    };
    let (base, prefix_m) = match base.split_once('-') {
        Some((m, rest)) if m.chars().all(|c| c.is_ascii_digit()) && !m.is_empty() => {
            (rest, Some(m.parse::<u32>().map_err(|_| unknown())?))
        }
        _ => (base, None),
    };
    let parse_m = |a: &str| -> Result<u32, GeneratorError> {
        a.trim().parse::<u32>().ok().filter(|&m| m >= 1).ok_or_else(unknown)
    };
    let parse_q = |a: &str| -> Result<WeightVector, GeneratorError> {
        let q = a.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        if q.is_empty() {
            return Err(unknown());
        }
        Ok(WeightVector::new(q))
    };
    let q1 = || WeightVector::from_ints(&[1]);
    let spec = match (base, args, prefix_m) {
        ("ribbon", None, None) => ProblemSpec::new(WeightFunction::one_plus_z_pow(1), WeightVector::unit(2)),
        ("hypermap", Some(a), None) => {
            let m = parse_m(a)?;
            ProblemSpec::new(WeightFunction::one_plus_z_pow(1), WeightVector::unit(m as usize))
        }
        ("hypermap", None, Some(m)) if m >= 1 => {
            ProblemSpec::new(WeightFunction::one_plus_z_pow(1), WeightVector::unit(m as usize))
        }
        ("dessin", None, None) => ProblemSpec::new(WeightFunction::one_plus_z_pow(2), q1()),
        ("double-dessin", Some(a), None) => ProblemSpec::new(WeightFunction::one_plus_z_pow(1), parse_q(a)?),
        ("bms", Some(a), None) => ProblemSpec::new(WeightFunction::one_plus_z_pow(parse_m(a)?), q1()),
        ("bms", None, Some(m)) if m >= 1 => ProblemSpec::new(WeightFunction::one_plus_z_pow(m), q1()),
        ("double-bms", Some(a), None) => {
            let (m, q) = a.split_once(';').ok_or_else(unknown)?;
            let m = parse_m(m)?;
            ProblemSpec::new(WeightFunction::one_plus_z_pow(m - 1), parse_q(q)?)
        }
        ("hurwitz", None, None) => ProblemSpec::new(WeightFunction::Exponential, q1()),
        ("double-hurwitz", Some(a), None) => ProblemSpec::new(WeightFunction::Exponential, parse_q(a)?),
        ("monotone", None, None) => ProblemSpec::new(WeightFunction::geometric(), q1()),
        ("double-monotone", Some(a), None) => ProblemSpec::new(WeightFunction::geometric(), parse_q(a)?),
        _ => return Err(unknown()),
    };
    Ok(spec.named(s))
}
