use num_traits::{One, Zero};
use proptest::prelude::*;

use onepoint::arith::rational::{int, ratio};
use onepoint::arith::{nullspace, nullspace_field, rank, Field, LaurentSeries, Polynomial, RationalFunction};
use onepoint::{Kh, QPoly, QSeries, Rational};

type Kn = RationalFunction<Kh>;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

fn qpoly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(QPoly::new)
}

fn nonzero_qpoly(max_len: usize) -> impl Strategy<Value = QPoly> {
    qpoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn kh() -> impl Strategy<Value = Kh> {
    (qpoly(3), nonzero_qpoly(3)).prop_map(|(n, d)| Kh::new(n, d).unwrap())
}

fn kn() -> impl Strategy<Value = Kn> {
    let poly = |len| prop::collection::vec(kh(), 0..=len).prop_map(Polynomial::new);
    (poly(2), poly(2).prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| Kn::new(n, d).unwrap())
}

fn field_axioms<F: Field>(a: &F, b: &F, c: &F) {
    assert_eq!((a.clone() + b) + c, a.clone() + &(b.clone() + c));
    assert_eq!(a.clone() * &(b.clone() + c), a.clone() * b + &(a.clone() * c));
    assert_eq!(a.clone() * b, b.clone() * a);
    assert_eq!(a.clone() - a, F::zero());
    if !a.is_zero() {
        assert_eq!(a.clone() * &a.inv(), F::one());
    }
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn kh_field_axioms(a in kh(), b in kh(), c in kh()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn kh_canonical_form_idempotent(a in kh()) {
        prop_assert_eq!(Kh::new(a.num().clone(), a.den().clone()).unwrap(), a.clone());
        prop_assert!(a.den().leading().is_some_and(One::is_one));
    }

    #[test]
    fn laurent_expansion_is_multiplicative(a in kh(), b in kh()) {
        let order = 6;
        let lhs = LaurentSeries::expand(&(a.clone() * &b), order);
        let rhs = (LaurentSeries::expand(&a, order + 8) * LaurentSeries::expand(&b, order + 8)).truncate(order);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nullspace_is_exact(rows in prop::collection::vec(prop::collection::vec(rational(), 4), 1..=4)) {
        let basis = nullspace(&rows);
        prop_assert_eq!(basis.len(), 4 - rank(&rows));
        for v in &basis {
            for r in &rows {
                let dot = r.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| acc + x * y);
                prop_assert!(dot.is_zero());
            }
        }
        prop_assert_eq!(basis, nullspace_field(&rows));
    }

    #[test]
    fn nullspace_over_kh(rows in prop::collection::vec(prop::collection::vec(kh(), 3), 1..=2)) {
        let basis = nullspace(&rows);
        prop_assert_eq!(basis.len(), 3 - rank(&rows));
        for v in &basis {
            for r in &rows {
                let dot = r.iter().zip(v).fold(Kh::zero(), |acc, (x, y)| acc + &(x.clone() * y));
                prop_assert!(dot.is_zero());
            }
        }
        prop_assert_eq!(basis, nullspace_field(&rows));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn nested_field_axioms(a in kn(), b in kn(), c in kn()) {
        field_axioms(&a, &b, &c);
    }
}

fn hp(cs: &[i64]) -> QPoly {
    QPoly::new(cs.iter().map(|&c| int(c)).collect())
}

fn khp(cs: &[i64]) -> Kh {
    Kh::from_poly(hp(cs))
}

#[test]
fn polynomial_examples() {
    assert_eq!(hp(&[-1, 0, 1]).gcd(&hp(&[-1, 1])), hp(&[-1, 1]));
    assert_eq!(hp(&[1, 1]) * hp(&[-1, 1]), hp(&[-1, 0, 1]));
    assert_eq!(
        hp(&[0, 0, 0, 1]).divmod(&hp(&[-1, 0, 1])).unwrap(),
        (hp(&[0, 1]), hp(&[0, 1]))
    );
}

#[test]
fn rational_function_examples() {
    let one = Kh::one();
    let lhs = one.clone() / khp(&[1, -1]) - one.clone() / khp(&[1, 1]);
    assert_eq!(lhs, khp(&[0, 2]) / khp(&[1, 0, -1]));
    let x = khp(&[3, 0, 1]);
    assert_eq!(x.clone() / x.clone(), one);
    assert_eq!(x.clone() + Kh::zero(), x);
}

#[test]
fn laurent_examples() {
    let f = Kh::var_pow(-1) / khp(&[1, 0, -1]);
    assert_eq!(
        QSeries::expand(&f, 6),
        QSeries::exact(-1, [1, 0, 1, 0, 1, 0, 1].map(int).to_vec()).truncate(6)
    );
    assert_eq!(
        QSeries::expand(&(Kh::one() / khp(&[1, -1])), 3),
        QSeries::exact(0, vec![int(1); 3]).truncate(3)
    );
    assert_eq!(
        QSeries::expand(&(khp(&[0, 0, 1]) / khp(&[1, 1])), 5),
        QSeries::exact(2, vec![int(1), int(-1), int(1)]).truncate(5)
    );
}

#[test]
fn nullspace_examples() {
    let id = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
    assert!(nullspace(&id).is_empty());
    assert_eq!(nullspace(&[vec![int(1), int(1)]]), vec![vec![int(-1), int(1)]]);
    let h = Kh::var();
    let m = vec![vec![h.clone(), Kh::one()], vec![h.clone() * &h, h.clone()]];
    assert_eq!(nullspace(&m), vec![vec![-Kh::var_pow(-1), Kh::one()]]);
}
