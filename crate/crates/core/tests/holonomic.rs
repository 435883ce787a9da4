mod common;

use common::closures::closure_pair_failures;
use num_traits::One;

use onepoint::arith::rational::{int, ratio};
use onepoint::arith::{Polynomial, RationalFunction, Ring};
use onepoint::generator::{catalog, one_point_series, WeightFunction};
use onepoint::holonomic::{
    cauchy_closure, from_hypergeometric, hadamard_closure, ode_to_rec, one_point_pipeline, rec_to_ode, sum_closure,
    HypergeometricTerm, LinearODE, PRecurrence, RecurrenceOperator,
};
use onepoint::recursion::{catalog_recursion, HLevelRelation};
use onepoint::{Kh, QPoly, Rational};

fn p(cs: &[i64]) -> QPoly {
    QPoly::new(cs.iter().map(|&c| int(c)).collect())
}

fn constants() -> PRecurrence<Rational> {
    PRecurrence::new(vec![p(&[-1]), p(&[1])], 0, vec![int(1)]).unwrap()
}

fn reciprocal_factorials() -> PRecurrence<Rational> {
    PRecurrence::new(vec![p(&[-1]), p(&[1, 1])], 0, vec![int(1)]).unwrap()
}

fn geometric(c: i64) -> PRecurrence<Rational> {
    PRecurrence::new(vec![p(&[-c]), p(&[1])], 0, vec![int(1)]).unwrap()
}

fn factorial(n: i64) -> Rational {
    (1..=n).fold(int(1), |acc, k| acc * int(k))
}

#[test]
fn unroll_examples() {
    assert_eq!(constants().unroll(3).unwrap(), vec![int(1); 4]);
    assert_eq!(
        reciprocal_factorials().unroll(3).unwrap(),
        vec![int(1), int(1), ratio(1, 2), ratio(1, 6)]
    );
}

#[test]
fn monotone_first_seed() {
    let h = Kh::var();
    let g = WeightFunction::geometric();
    // (nℏ) m_{n+1} - G(nℏ) m_n = 0 from n = 1
    let ratio_fn = |n: i64| g.at_multiple(n).unwrap() / (Kh::from_int(n) * &h);
    let mut m = Kh::one();
    m = m * &ratio_fn(1);
    assert_eq!(m, Kh::one() / (h.clone() * (Kh::one() - h.clone())));
}

#[test]
fn hypergeometric_examples() {
    let one = RationalFunction::<Rational>::one();
    let c = from_hypergeometric(&HypergeometricTerm {
        ratio: one,
        first_index: 0,
        first_value: int(1),
    })
    .unwrap();
    assert_eq!(c.coeffs(), constants().coeffs());
    let n = Polynomial::<Rational>::x();
    let t = HypergeometricTerm {
        ratio: RationalFunction::new(n.clone(), n + Polynomial::one()).unwrap(),
        first_index: 1,
        first_value: int(1),
    };
    let rec = from_hypergeometric(&t).unwrap();
    assert_eq!(rec.coeffs(), &[p(&[0, -1]), p(&[1, 1])]);
    assert_eq!(
        rec.unroll(4).unwrap(),
        vec![int(1), ratio(1, 2), ratio(1, 3), ratio(1, 4)]
    );
}

#[test]
fn monotone_u_sequence() {
    let chain = one_point_pipeline(&WeightFunction::geometric()).unwrap();
    // kℏ(1 - kℏ) u_{k+1} - u_k = 0
    let h = Polynomial::constant(Kh::var());
    let k = Polynomial::<Kh>::x();
    let lead = k.clone() * &h * &(Polynomial::one() - k * &h);
    let want = RecurrenceOperator::new(vec![-Polynomial::<Kh>::one(), lead])
        .unwrap()
        .normalized();
    assert_eq!(chain.u.operator(), &want);
}

#[test]
fn sum_examples() {
    let s = sum_closure(&constants(), &constants()).unwrap();
    assert_eq!(s.order(), 1);
    assert_eq!(s.unroll(5).unwrap(), vec![int(2); 6]);

    let s = sum_closure(&constants(), &reciprocal_factorials()).unwrap();
    assert_eq!(s.order(), 2);
    let want: Vec<Rational> = (0..=20).map(|n| int(1) + int(1) / factorial(n)).collect();
    assert_eq!(s.unroll(20).unwrap()[..], want[s.offset() as usize..]);

    let s = sum_closure(&geometric(2), &geometric(3)).unwrap();
    assert_eq!(s.coeffs(), &[p(&[6]), p(&[-5]), p(&[1])]);
    let want: Vec<Rational> = (0..=20u32).map(|n| int(2i64.pow(n) + 3i64.pow(n))).collect();
    assert_eq!(s.unroll(20).unwrap(), want);
}

#[test]
fn hadamard_examples() {
    let h = hadamard_closure(&geometric(2), &geometric(3)).unwrap();
    assert_eq!(h.order(), 1);
    assert_eq!(
        h.unroll(10).unwrap(),
        (0..=10u32).map(|n| int(6i64.pow(n))).collect::<Vec<_>>()
    );
    let id = hadamard_closure(&reciprocal_factorials(), &constants()).unwrap();
    assert_eq!(id.operator(), reciprocal_factorials().operator());
}

#[test]
fn cauchy_example() {
    let c = cauchy_closure(&reciprocal_factorials(), &reciprocal_factorials()).unwrap();
    let want: Vec<Rational> = (0..=25).map(|n| int(2i64.pow(n as u32)) / factorial(n)).collect();
    assert_eq!(c.unroll(25).unwrap()[..], want[c.offset() as usize..]);
}

#[test]
fn ode_examples() {
    let ode = rec_to_ode(&constants()).unwrap();
    // (1 - x) A' - A = 0, up to sign
    let want = LinearODE::new(vec![p(&[-1]), p(&[1, -1])]).unwrap().normalized();
    assert_eq!(ode, want);
    let op = ode_to_rec(&LinearODE::new(vec![p(&[-1]), p(&[1])]).unwrap()).unwrap();
    assert_eq!(
        op,
        RecurrenceOperator::new(vec![p(&[-1]), p(&[1, 1])])
            .unwrap()
            .normalized()
    );
}

#[test]
fn monotone_pipeline() {
    let chain = one_point_pipeline(&WeightFunction::geometric()).unwrap();
    let res = chain.result();
    let hh = Kh::var() * &Kh::var();
    let n = Polynomial::<Kh>::x();
    let c = |x: Kh| Polynomial::constant(x);
    // (-2 + 4n) a(n) + (-1 - n + ℏ²n² + ℏ²n³) a(n+1) = 0
    let p0 = c(Kh::from_int(-2)) + &(n.clone() * &c(Kh::from_int(4)));
    let n2 = n.clone() * &n;
    let p1 = c(Kh::from_int(-1)) - &n + &(n2.clone() * &c(hh.clone())) + &(n2 * &n * &c(hh.clone()));
    assert_eq!(
        res.operator(),
        &RecurrenceOperator::new(vec![p0, p1]).unwrap().normalized()
    );

    let terms = res.unroll(15).unwrap();
    let p = catalog("monotone").unwrap();
    for d in 1..=15 {
        let s = one_point_series(&p, d, 0).unwrap();
        let exact = s.value.as_exact().unwrap().clone();
        assert_eq!(terms[(d - res.offset()) as usize], hh.clone() * &exact, "d={d}");
    }

    let convolution = chain.convolution.unroll(15).unwrap();
    let (u, v) = (chain.u.unroll(15).unwrap(), chain.v.unroll(15).unwrap());
    let (ou, ov, oc) = (chain.u.offset(), chain.v.offset(), chain.convolution.offset());
    assert_eq!((ou, ov, oc), (0, 0, 0));
    for d in 0..=15usize {
        let direct = (0..=d).fold(Kh::from_int(0), |acc, k| acc + &(u[k].clone() * &v[d - k]));
        assert_eq!(convolution[d], direct, "d={d}");
    }

    let rel = HLevelRelation::from_operator(res.operator()).unwrap();
    let gd = rel.to_gd_form().unwrap();
    assert_eq!(gd, vec![catalog_recursion("monotone").unwrap().recursion]);
}

#[test]
fn randomized_closures() {
    assert_eq!(closure_pair_failures(50), Vec::<String>::new());
}
