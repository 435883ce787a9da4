#![allow(dead_code)]

pub mod checks;
pub mod closures;
pub mod figures;
pub mod oracles;
pub mod recursions;
pub mod tables;

use onepoint::arith::rational::parse_rational;
use onepoint::Rational;

pub fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

/// Evaluates a table polynomial such as `"5/2q3q1^2+q2"` at `q = (q_1, q_2, …)`.
pub fn eval_q(poly: &str, qs: &[Rational]) -> Rational {
    let qk = |k: usize| qs.get(k - 1).cloned().unwrap_or_else(|| q("0"));
    let mut total = q("0");
    for term in poly.split('+') {
        let (coeff, mut rest) = match term.find('q') {
            Some(i) => (&term[..i], &term[i..]),
            None => (term, ""),
        };
        let mut value = if coeff.is_empty() { q("1") } else { q(coeff) };
        while let Some(body) = rest.strip_prefix('q') {
            let k: usize = body[..1].parse().unwrap();
            rest = &body[1..];
            let mut e = 1;
            if let Some(pow) = rest.strip_prefix('^') {
                let end = pow.find('q').unwrap_or(pow.len());
                e = pow[..end].parse().unwrap();
                rest = &pow[end..];
            }
            for _ in 0..e {
                value *= qk(k);
            }
        }
        total += value;
    }
    total
}

/// `q` vectors at which the table polynomials are checked: unit vectors and
/// the all-ones vector of length 3.
pub fn specializations() -> Vec<Vec<i64>> {
    vec![vec![1], vec![0, 1], vec![0, 0, 1], vec![1, 1, 1]]
}

pub fn qvec(ints: &[i64]) -> Vec<Rational> {
    ints.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

pub fn qlist(ints: &[i64]) -> String {
    ints.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}
