//! Randomized certification of the closure operations over `ℚ`.

use num_traits::Zero;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use onepoint::arith::rational::ratio;
use onepoint::holonomic::{
    cauchy_closure, cauchy_ode, hadamard_closure, ode_to_rec, rec_to_ode, sum_closure, PRecurrence,
};
use onepoint::{QPoly, Rational};

const TERMS: i64 = 25;

fn small() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

/// Order 1 or 2, coefficients of degree ≤ 1, leading coefficient without
/// roots at `n ≥ 0`, offset 0.
pub fn recurrence() -> impl Strategy<Value = PRecurrence<Rational>> {
    (1usize..=2)
        .prop_flat_map(|r| {
            let lower = prop::collection::vec(prop::collection::vec(small(), 0..=2), r);
            let lead = (prop_oneof![Just(0i64), 1i64..=3], 1i64..=3, prop::bool::ANY);
            let init = prop::collection::vec(small(), r);
            (lower, lead, init)
        })
        .prop_filter("nonzero initial terms", |(_, _, init)| {
            init.iter().any(|x| !x.is_zero())
        })
        .prop_map(|(lower, (shift, scale, neg), init)| {
            let s = Rational::from_integer(scale.into()) * if neg { ratio(-1, 1) } else { ratio(1, 1) };
            let lead = if shift == 0 {
                QPoly::constant(s)
            } else {
                QPoly::new(vec![s.clone() * Rational::from_integer(shift.into()), s])
            };
            let mut coeffs: Vec<QPoly> = lower.into_iter().map(QPoly::new).collect();
            coeffs.push(lead);
            PRecurrence::new(coeffs, 0, init).expect("nonzero leading coefficient")
        })
}

/// Terms `a_0 ..= a_n`, with zeros below the offset.
fn terms(rec: &PRecurrence<Rational>, n: i64) -> Vec<Rational> {
    let body = rec.unroll(n).expect("regular recurrence");
    let mut out = vec![Rational::zero(); rec.offset().max(0) as usize];
    out.extend(body);
    out
}

fn check(label: &str, out: &PRecurrence<Rational>, bound: usize, expected: &[Rational], failures: &mut Vec<String>) {
    if out.order() > bound {
        failures.push(format!("{label}: order {} exceeds {bound}", out.order()));
    }
    let n = out.order() as i64 + TERMS;
    match out.unroll(n) {
        Ok(got) => {
            let off = out.offset() as usize;
            if got[..] != expected[off..=n as usize] {
                failures.push(format!(
                    "{label}: unrolled terms differ from direct computation ({out})"
                ));
            }
        }
        Err(e) => failures.push(format!("{label}: {e}")),
    }
}

/// Sum, Hadamard and Cauchy closures of random pairs, each unrolled
/// `order + 25` terms, plus the recurrence/ODE round trip on each input.
pub fn closure_pair_failures(pairs: usize) -> Vec<String> {
    let mut runner = TestRunner::deterministic();
    let strat = (recurrence(), recurrence());
    let mut failures = Vec::new();
    for i in 0..pairs {
        let (a, b) = strat.new_tree(&mut runner).expect("strategy").current();
        let n = 2 * (a.order() * b.order() + a.order() + b.order()) as i64 + TERMS + 4;
        let (ta, tb) = (terms(&a, n), terms(&b, n));
        let len = n as usize + 1;
        let sum: Vec<Rational> = (0..len).map(|k| &ta[k] + &tb[k]).collect();
        let had: Vec<Rational> = (0..len).map(|k| &ta[k] * &tb[k]).collect();
        let conv: Vec<Rational> = (0..len)
            .map(|k| (0..=k).fold(Rational::zero(), |acc, j| acc + &ta[j] * &tb[k - j]))
            .collect();
        let (ra, rb) = (a.order(), b.order());
        match sum_closure(&a, &b) {
            Ok(r) => check(&format!("pair {i} sum"), &r, ra + rb, &sum, &mut failures),
            Err(e) => failures.push(format!("pair {i} sum: {e}")),
        }
        match hadamard_closure(&a, &b) {
            Ok(r) => check(&format!("pair {i} hadamard"), &r, ra * rb, &had, &mut failures),
            Err(e) => failures.push(format!("pair {i} hadamard: {e}")),
        }
        match cauchy_closure(&a, &b) {
            Ok(r) => check(&format!("pair {i} cauchy"), &r, usize::MAX, &conv, &mut failures),
            Err(e) => failures.push(format!("pair {i} cauchy: {e}")),
        }
        // the Cauchy bound is on the ODE order: the recurrence order of the
        // product also depends on the coefficient degrees
        match (cauchy_ode(&a, &b), rec_to_ode(&a), rec_to_ode(&b)) {
            (Ok(c), Ok(oa), Ok(ob)) => {
                if c.order() > oa.order() * ob.order() {
                    failures.push(format!(
                        "pair {i} cauchy: ODE order {} exceeds {}",
                        c.order(),
                        oa.order() * ob.order()
                    ));
                }
                if c.apply_series(&conv[..30]).iter().any(|x| !x.is_zero()) {
                    failures.push(format!("pair {i} cauchy: ODE does not annihilate the product"));
                }
            }
            _ => failures.push(format!("pair {i} cauchy: ODE construction failed")),
        }
        for (label, rec, t) in [("a", &a, &ta), ("b", &b, &tb)] {
            let ode = match rec_to_ode(rec) {
                Ok(o) => o,
                Err(e) => {
                    failures.push(format!("pair {i} {label} rec_to_ode: {e}"));
                    continue;
                }
            };
            if ode.apply_series(&t[..30.min(t.len())]).iter().any(|x| !x.is_zero()) {
                failures.push(format!("pair {i} {label}: ODE does not annihilate the series"));
            }
            match ode_to_rec(&ode) {
                Ok(op) => {
                    let get = |m: i64| if m < 0 { Rational::zero() } else { t[m as usize].clone() };
                    let bad = (0..TERMS).find(|&k| !op.apply_at(k, get).is_zero());
                    if let Some(k) = bad {
                        failures.push(format!("pair {i} {label}: round-tripped operator fails at n={k}"));
                    }
                }
                Err(e) => failures.push(format!("pair {i} {label} ode_to_rec: {e}")),
            }
        }
    }
    failures
}
