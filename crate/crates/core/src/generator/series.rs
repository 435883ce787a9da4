use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{ProblemSpec, WeightFunction};
use crate::arith::rational::{binomial, factorial, int, Rational};
use crate::arith::{LaurentSeries, Precision, RationalFunction};
use crate::error::GeneratorError;
use crate::symfunc::{hom_and_elem, hook_schur_from, HookIndex};
use crate::{Kh, QPoly, QSeries};

/// Value of a 1-point series: exact in `ℚ(ℏ)` for rational `G`, a truncated
/// Laurent series otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesValue {
    Exact(Kh),
    Truncated(QSeries),
}

impl SeriesValue {
    pub fn laurent(&self, order: i64) -> QSeries {
        match self {
            SeriesValue::Exact(f) => LaurentSeries::expand(f, order),
            SeriesValue::Truncated(s) => s.truncate(order),
        }
    }

    /// Coefficient of `ℏ^e`.
    pub fn coefficient(&self, e: i64) -> Rational {
        match self {
            SeriesValue::Exact(f) => LaurentSeries::expand(f, e + 1).coeff(e),
            SeriesValue::Truncated(s) => s.coeff(e),
        }
    }

    pub fn as_exact(&self) -> Option<&Kh> {
        match self {
            SeriesValue::Exact(f) => Some(f),
            SeriesValue::Truncated(_) => None,
        }
    }
}

/// `n(d) = Σ_g n_g(d) ℏ^{2g-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OnePointSeries {
    pub d: i64,
    pub value: SeriesValue,
}

impl OnePointSeries {
    /// `n_g(d)`, the coefficient of `ℏ^{2g-1}`.
    pub fn invariant(&self, g: i64) -> Rational {
        self.value.coefficient(2 * g - 1)
    }

    /// `n_0(d), …, n_{g_max}(d)` from a single expansion.
    pub fn invariants(&self, g_max: i64) -> Vec<Rational> {
        let s = self.value.laurent(2 * g_max);
        (0..=g_max).map(|g| s.coeff(2 * g - 1)).collect()
    }
}

fn truncation_order(d: i64, g_max: i64) -> i64 {
    2 * g_max + d + 2
}

/// `Π_{i=1}^d G((k-i)ℏ)` over the contents of the hook `(k, 1^{d-k})`.
///
/// For exponential `G` the product is `exp(d(2k-d-1)ℏ/2)` known below
/// ℏ^`order`; `order` is ignored for rational `G`.
pub fn content_product(g: &WeightFunction, k: i64, d: i64, order: i64) -> Result<SeriesValue, GeneratorError> {
    let hook = HookIndex::new(d, k).map_err(|_| GeneratorError::DegreeOutOfRange(d))?;
    match g {
        WeightFunction::Rational { .. } => {
            let mut acc = Kh::one();
            for c in hook.contents() {
                acc = acc * &g.at_multiple(c)?;
            }
            Ok(SeriesValue::Exact(acc))
        }
        WeightFunction::Exponential => {
            let c = Rational::new((d * (2 * k - d - 1)).into(), 2.into());
            Ok(SeriesValue::Truncated(LaurentSeries::exp_linear(&c, order)))
        }
    }
}

fn check_degree(d: i64) -> Result<(), GeneratorError> {
    if d < 1 {
        Err(GeneratorError::DegreeOutOfRange(d))
    } else {
        Ok(())
    }
}

fn sign(e: i64) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `n(d)` from the hook expansion `Σ_k (-1)^{d-k} s_{(k,1^{d-k})}(q/ℏ) Π G((k-i)ℏ)`.
///
/// `g_max` fixes the truncation for exponential `G` and is otherwise unused.
pub fn one_point_series(p: &ProblemSpec, d: i64, g_max: i64) -> Result<OnePointSeries, GeneratorError> {
    check_degree(d)?;
    let (h, e) = hom_and_elem(&p.q, d as usize);
    let hooks: Vec<QSeries> = (1..=d)
        .map(|k| hook_schur_from(HookIndex { d, k }, &h, &e).scale(&sign(d - k)))
        .collect();
    let value = match &p.weight {
        WeightFunction::Rational { num, den } => SeriesValue::Exact(hook_sum_rational(num, den, d, &hooks)?),
        WeightFunction::Exponential => {
            let order = truncation_order(d, g_max);
            let mut acc = QSeries::zero_to(order - d);
            for (k, s) in (1..=d).zip(&hooks) {
                if let SeriesValue::Truncated(c) = content_product(&p.weight, k, d, order)? {
                    acc = acc + &(c * s);
                }
            }
            SeriesValue::Truncated(acc)
        }
    };
    Ok(OnePointSeries { d, value })
}

/// Sums `Σ_k hooks[k-1] · Π_c G(cℏ)` over a common denominator
/// `ℏ^d Π_{|c|<d} den(cℏ)` and reduces once at the end.
fn hook_sum_rational(num: &QPoly, den: &QPoly, d: i64, hooks: &[QSeries]) -> Result<Kh, GeneratorError> {
    let at = |p: &QPoly, c: i64| {
        if c == 0 {
            QPoly::constant(p.coeff(0))
        } else {
            p.scale_var(&int(c))
        }
    };
    let span = d - 1;
    let nums: Vec<QPoly> = (-span..=span).map(|c| at(num, c)).collect();
    let dens: Vec<QPoly> = (-span..=span).map(|c| at(den, c)).collect();
    let trivial_den = den.is_constant();
    let idx = |c: i64| (c + span) as usize;
    // window(k) = Π_{c in hook k} num(cℏ) · Π_{c not in hook k} den(cℏ)
    let mut window = QPoly::one();
    for c in -span..=span {
        if c <= 0 {
            window = window * &nums[idx(c)];
        } else if !trivial_den {
            window = window * &dens[idx(c)];
        }
    }
    let mut total = QPoly::zero();
    for (k, s) in (1..=d).zip(hooks) {
        if k > 1 {
            let (enter, leave) = (idx(k - 1), idx(k - 1 - d));
            let mut top = window * &nums[enter];
            let mut bottom = nums[leave].clone();
            if !trivial_den {
                top = top * &dens[leave];
                bottom = bottom * &dens[enter];
            }
            window = top.divmod(&bottom)?.0;
        }
        if s.is_zero() {
            continue;
        }
        let mut term = QPoly::zero();
        for (ex, c) in s.terms() {
            term = term + &window.scale(c).shift_up((ex + d) as usize);
        }
        total = total + &term;
    }
    let mut denominator = QPoly::monomial(int(1), d as usize);
    if !trivial_den {
        for p in &dens {
            denominator = denominator * p;
        }
    }
    Ok(RationalFunction::new(total, denominator)?)
}

/// `n(d)` for `q = (1)` from `(1/(d! ℏ^d)) Σ_k (-1)^{d-k} C(d-1,k-1) Π G((k-i)ℏ)`.
pub fn one_point_series_simple(g: &WeightFunction, d: i64, g_max: i64) -> Result<OnePointSeries, GeneratorError> {
    check_degree(d)?;
    let pref = Rational::new(1.into(), factorial(d as u64));
    let value = match g {
        WeightFunction::Rational { .. } => {
            let mut acc = Kh::zero();
            for k in 1..=d {
                let SeriesValue::Exact(c) = content_product(g, k, d, 0)? else {
                    unreachable!()
                };
                let w = sign(d - k) * Rational::from_integer(binomial(d - 1, k - 1));
                acc = acc + &(c * &Kh::constant(w));
            }
            SeriesValue::Exact(acc * &Kh::constant(pref) * &Kh::var_pow(-d))
        }
        WeightFunction::Exponential => {
            let order = truncation_order(d, g_max);
            let mut acc = QSeries::zero_to(order);
            for k in 1..=d {
                let SeriesValue::Truncated(c) = content_product(g, k, d, order)? else {
                    unreachable!()
                };
                let w = sign(d - k) * Rational::from_integer(binomial(d - 1, k - 1));
                acc = acc + &c.scale(&w);
            }
            SeriesValue::Truncated(acc.scale(&pref).mul_monomial(-d))
        }
    };
    Ok(OnePointSeries { d, value })
}

/// `n(d) = Σ_k a_k b_{d-k} Σ_{ℓ<k} u_ℓ v_{d-ℓ}` with `a_n = Π_{i≤n} G((i-1)ℏ)`,
/// `b_n = Π_{i≤n} G(-iℏ)`, `u_n = h_n(q/ℏ)`, `v_n = (-1)^{n+1} e_n(q/ℏ)`.
pub fn one_point_series_factored(p: &ProblemSpec, d: i64) -> Result<OnePointSeries, GeneratorError> {
    check_degree(d)?;
    let g = &p.weight;
    if !g.is_rational() {
        return Err(GeneratorError::ExponentialUnsupported);
    }
    let n = d as usize;
    let mut a = vec![Kh::one()];
    let mut b = vec![Kh::one()];
    for i in 1..=d {
        a.push(a[a.len() - 1].clone() * &g.at_multiple(i - 1)?);
        b.push(b[b.len() - 1].clone() * &g.at_multiple(-i)?);
    }
    let (h, e) = hom_and_elem(&p.q, n);
    let lift = |s: &QSeries| s.to_rational_function().expect("exact Laurent polynomial");
    let u: Vec<Kh> = h.iter().map(lift).collect();
    let v: Vec<Kh> = e
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let x = lift(s);
            if i % 2 == 1 {
                x
            } else {
                -x
            }
        })
        .collect();
    let mut total = Kh::zero();
    let mut inner = Kh::zero();
    for k in 1..=n {
        inner = inner + &(u[k - 1].clone() * &v[n - k + 1]);
        if inner.is_zero() {
            continue;
        }
        total = total + &(a[k].clone() * &b[n - k] * &inner);
    }
    Ok(OnePointSeries {
        d,
        value: SeriesValue::Exact(total),
    })
}

/// Table of `n_g(d)` on the rectangle `0 ≤ g ≤ g_max`, `1 ≤ d ≤ d_max`.
///
/// `stride` is 1 for the series index of `n(d)`; a relabelled table with
/// stride `s` stores `n_g(s·d)` under index `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantTable {
    pub problem: ProblemSpec,
    pub g_max: i64,
    pub d_max: i64,
    pub stride: i64,
    entries: BTreeMap<(i64, i64), Rational>,
}

impl InvariantTable {
    pub fn from_entries(
        problem: ProblemSpec,
        g_max: i64,
        d_max: i64,
        stride: i64,
        entries: impl IntoIterator<Item = (i64, i64, Rational)>,
    ) -> Self {
        let entries = entries.into_iter().map(|(g, d, v)| ((d, g), v)).collect();
        InvariantTable {
            problem,
            g_max,
            d_max,
            stride,
            entries,
        }
    }

    pub fn get(&self, g: i64, d: i64) -> Option<&Rational> {
        self.entries.get(&(d, g))
    }

    /// `(g, d, value)` sorted by `(d, g)`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &Rational)> {
        self.entries.iter().map(|(&(d, g), v)| (g, d, v))
    }

    pub fn is_complete(&self) -> bool {
        (1..=self.d_max).all(|d| (0..=self.g_max).all(|g| self.get(g, d).is_some()))
    }

    /// Re-indexes by `d ↦ d / stride`, keeping multiples of the stride only.
    pub fn relabel(&self, stride: i64) -> InvariantTable {
        assert!(
            stride >= 1 && self.stride == 1,
            "relabel applies to series-indexed tables"
        );
        let entries = self
            .entries
            .iter()
            .filter(|((d, _), _)| d % stride == 0)
            .map(|(&(d, g), v)| ((d / stride, g), v.clone()))
            .collect();
        InvariantTable {
            problem: self.problem.clone(),
            g_max: self.g_max,
            d_max: self.d_max / stride,
            stride,
            entries,
        }
    }
}

pub fn invariants(p: &ProblemSpec, d_max: i64, g_max: i64) -> Result<InvariantTable, GeneratorError> {
    let mut entries = Vec::new();
    for d in 1..=d_max {
        let s = one_point_series(p, d, g_max)?;
        for (g, v) in s.invariants(g_max).into_iter().enumerate() {
            entries.push((g as i64, d, v));
        }
    }
    Ok(InvariantTable::from_entries(p.clone(), g_max, d_max, 1, entries))
}

/// Coefficients of `x^d`, `d = 0..=d_max`, in the principal specialisation of
/// the wave function: `h_d(q/ℏ) Π_{k=1}^{d-1} G(kℏ)`.
///
/// `g_max` fixes the truncation for exponential `G`.
pub fn wave_coefficients(p: &ProblemSpec, d_max: i64, g_max: i64) -> Result<Vec<SeriesValue>, GeneratorError> {
    let (h, _) = hom_and_elem(&p.q, d_max.max(0) as usize);
    let mut out = Vec::with_capacity(h.len());
    for (d, hd) in h.iter().enumerate() {
        let d = d as i64;
        let v = match &p.weight {
            WeightFunction::Rational { .. } => {
                let mut acc = hd.to_rational_function().expect("exact Laurent polynomial");
                for k in 1..d {
                    acc = acc * &p.weight.at_multiple(k)?;
                }
                SeriesValue::Exact(acc)
            }
            WeightFunction::Exponential => {
                let order = truncation_order(d, g_max);
                let c = Rational::new((d * (d - 1)).into(), 2.into());
                let e = LaurentSeries::exp_linear(&c, order);
                let s = e * hd;
                debug_assert!(s.precision() != Precision::Exact);
                SeriesValue::Truncated(s)
            }
        };
        out.push(v);
    }
    Ok(out)
}
