//! Property checks shared by the integration suites and the acceptance
//! report. Each returns a list of human-readable failures.

use num_traits::{One, Zero};
use onepoint::arith::rational::{binomial, factorial, format_rational};
use onepoint::generator::{
    catalog, closed_form_hurwitz, closed_form_monotone, invariants, monotone_composition_sum, monotone_tuple_sum,
    one_point_series, one_point_series_factored, one_point_series_simple,
};
use onepoint::symfunc::{hom_and_elem, is_hook, principal_spec_derivative, WeightVector};
use onepoint::{QPoly, Rational};

/// Catalog presets exercised by the property suites.
pub const PROBLEMS: &[&str] = &[
    "ribbon",
    "hypermap(3)",
    "dessin",
    "double-dessin(1,2,3)",
    "bms(3)",
    "double-bms(3;1,0,2)",
    "hurwitz",
    "double-hurwitz(0,1)",
    "monotone",
    "double-monotone(1,1,1)",
];

/// Hook expansion, factored sum and (for `q = (1)`) the binomial sum agree.
pub fn path_equivalence_failures(d_max: i64) -> Vec<String> {
    let mut out = Vec::new();
    for name in PROBLEMS {
        let p = catalog(name).unwrap();
        let unit_q = p.q.entries().len() == 1 && p.q.get(1).is_one();
        for d in 1..=d_max {
            let a = one_point_series(&p, d, 6).unwrap();
            if p.is_rational() {
                let b = one_point_series_factored(&p, d).unwrap();
                if a != b {
                    out.push(format!("{name}, d={d}: hook sum != factored sum"));
                }
            }
            if unit_q {
                let c = one_point_series_simple(&p.weight, d, 6).unwrap();
                let order = 2 * 6;
                if a.value.laurent(order) != c.value.laurent(order) {
                    out.push(format!("{name}, d={d}: hook sum != binomial sum"));
                }
            }
        }
    }
    out
}

/// Odd in `ℏ` through `ℏ^15`, valuation `≥ -1`, with equality exactly when
/// `n_0(d) ≠ 0`.
pub fn parity_failures(d_max: i64) -> Vec<String> {
    let mut out = Vec::new();
    for name in PROBLEMS {
        let p = catalog(name).unwrap();
        for d in 1..=d_max {
            let s = one_point_series(&p, d, 8).unwrap().value.laurent(16);
            for (e, c) in s.terms() {
                if e % 2 == 0 && !c.is_zero() {
                    out.push(format!("{name}, d={d}: nonzero coefficient at h^{e}"));
                }
            }
            let val = s.valuation();
            if val.is_some_and(|v| v < -1) {
                out.push(format!("{name}, d={d}: valuation {val:?}"));
            }
            if (val == Some(-1)) != !s.coeff(-1).is_zero() {
                out.push(format!("{name}, d={d}: valuation -1 iff n_0 != 0 fails"));
            }
        }
    }
    out
}

/// Closed forms for 1-part simple and monotone Hurwitz numbers against the
/// series, `d ≤ 6`, `g ≤ 3`.
pub fn closed_form_failures() -> Vec<String> {
    let mut out = Vec::new();
    let h = invariants(&catalog("hurwitz").unwrap(), 6, 3).unwrap();
    let m = invariants(&catalog("monotone").unwrap(), 6, 3).unwrap();
    for d in 1..=6 {
        for g in 0..=3 {
            let cf = closed_form_hurwitz(d, g);
            if h.get(g, d) != Some(&cf) {
                out.push(format!(
                    "hurwitz closed form at (g={g}, d={d}): {}",
                    format_rational(&cf)
                ));
            }
            if monotone_composition_sum(d, g) != monotone_tuple_sum(d, g) {
                out.push(format!("monotone sums disagree at (g={g}, d={d})"));
            }
            match closed_form_monotone(d, g) {
                Ok(v) if m.get(g, d) == Some(&v) => {}
                Ok(v) => out.push(format!(
                    "monotone closed form at (g={g}, d={d}): {}",
                    format_rational(&v)
                )),
                Err(e) => out.push(format!("monotone closed form at (g={g}, d={d}): {e}")),
            }
        }
    }
    out
}

fn finite_difference(xs: &[Rational], order: usize) -> Vec<Rational> {
    let mut v = xs.to_vec();
    for _ in 0..order {
        v = v.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    v
}

/// `h_g(d)·d!/d^d` and `m_g(d)/C(2d,d)` are polynomials of degree `3g-1`
/// in `d`: their `3g`-th differences over `d = 2..=3g+4` vanish and the
/// `(3g-1)`-th do not.
pub fn polynomiality_failures() -> Vec<String> {
    let mut out = Vec::new();
    for g in [1i64, 2] {
        let top = 3 * g + 4;
        let h = invariants(&catalog("hurwitz").unwrap(), top, g).unwrap();
        let m = invariants(&catalog("monotone").unwrap(), top, g).unwrap();
        let hs: Vec<Rational> = (2..=top)
            .map(|d| {
                h.get(g, d).unwrap() * Rational::from_integer(factorial(d as u64))
                    / Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(d), d as usize))
            })
            .collect();
        let ms: Vec<Rational> = (2..=top)
            .map(|d| m.get(g, d).unwrap() / Rational::from_integer(binomial(2 * d, d)))
            .collect();
        for (label, xs) in [("hurwitz", hs), ("monotone", ms)] {
            let k = 3 * g as usize;
            if !finite_difference(&xs, k).iter().all(Zero::is_zero) {
                out.push(format!("{label}, g={g}: {k}-th differences do not vanish"));
            }
            if finite_difference(&xs, k - 1).iter().all(Zero::is_zero) {
                out.push(format!("{label}, g={g}: degree below {}", k - 1));
            }
        }
    }
    out
}

fn partitions(n: i64, max: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Coefficient of `s` in `Π_□ (s + c(□)) / h(□)` over an explicit diagram.
fn hook_content_linear(lambda: &[i64]) -> Rational {
    let conj = |j: i64| lambda.iter().filter(|&&r| r > j).count() as i64;
    let mut prod = QPoly::one();
    let mut hooks = Rational::one();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let c = j - i as i64;
            let h = (row - j - 1) + (conj(j) - i as i64 - 1) + 1;
            prod = prod * QPoly::new(vec![Rational::from_integer(c.into()), Rational::one()]);
            hooks *= Rational::from_integer(h.into());
        }
    }
    prod.coeff(1) / hooks
}

/// Principal-specialization derivative against the hook-content oracle and
/// the hook dichotomy, `|λ| ≤ 6`.
pub fn hook_dichotomy_failures() -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for lambda in partitions(n, n) {
            let got = principal_spec_derivative(&lambda).unwrap();
            let oracle = hook_content_linear(&lambda);
            let expected = if is_hook(&lambda) {
                let sign = if (n - lambda[0]) % 2 == 0 { 1 } else { -1 };
                Rational::new(sign.into(), n.into())
            } else {
                Rational::zero()
            };
            if got != oracle || got != expected {
                out.push(format!(
                    "{lambda:?}: got {}, oracle {}",
                    format_rational(&got),
                    format_rational(&oracle)
                ));
            }
        }
    }
    out
}

/// `Σ_i (-1)^i e_i h_{n-i} = 0` for `n ≥ 1`.
pub fn newton_failures(q: &WeightVector, n_max: usize) -> Vec<String> {
    let (h, e) = hom_and_elem(q, n_max);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut acc = e[0].clone() * &h[n];
        for i in 1..=n {
            let t = e[i].clone() * &h[n - i];
            acc = if i % 2 == 0 { acc + &t } else { acc - &t };
        }
        if !acc.is_zero() {
            out.push(format!("n={n}"));
        }
    }
    out
}
