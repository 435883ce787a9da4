//! Human-readable recursions, e.g.
//! `d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::GDRecursion;
use crate::arith::rational::{format_rational, Rational};
use crate::QPoly;

/// Integer polynomial, coefficients low to high.
type IPoly = Vec<BigInt>;

fn primitive(p: &QPoly) -> (Rational, IPoly) {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IPoly = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    let prim = ints.iter().map(|c| c / &g).collect();
    (Rational::new(g, lcm), prim)
}

fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_i64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            if k * k != n {
                out.push(n / k);
            }
        }
        k += 1;
    }
    Some(out)
}

/// Quotient of `p` by `a d - b` when the division is exact.
fn divide_linear(p: &IPoly, a: i64, b: i64) -> Option<IPoly> {
    let n = p.len() - 1;
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    // synthetic division from the top
    for k in (1..=n).rev() {
        let c = &p[k] + &carry;
        if !c.is_multiple_of(&a) {
            return None;
        }
        q[k - 1] = &c / &a;
        carry = &q[k - 1] * &b;
    }
    if (&p[0] + &carry).is_zero() {
        Some(q)
    } else {
        None
    }
}

/// `(content, [(a, b, multiplicity)] for factors a d - b, residual)`.
fn factor(p: &QPoly) -> (Rational, Vec<(i64, i64, usize)>, IPoly) {
    let (c, mut prim) = primitive(p);
    let mut factors: Vec<(i64, i64, usize)> = Vec::new();
    let val = prim.iter().position(|x| !x.is_zero()).unwrap_or(0);
    if val > 0 {
        factors.push((1, 0, val));
        prim.drain(..val);
    }
    if prim.len() > 1 {
        if let (Some(ps), Some(qs)) = (divisors(&prim[0]), divisors(prim.last().expect("nonempty"))) {
            let mut cands: Vec<(i64, i64)> = Vec::new();
            for &a in &qs {
                for &b in &ps {
                    for b in [b, -b] {
                        if b.gcd(&a) == 1 && !cands.contains(&(a, b)) {
                            cands.push((a, b));
                        }
                    }
                }
            }
            for (a, b) in cands {
                let mut mult = 0;
                while prim.len() > 1 {
                    match divide_linear(&prim, a, b) {
                        Some(q) => {
                            prim = q;
                            mult += 1;
                        }
                        None => break,
                    }
                }
                if mult > 0 {
                    factors.push((a, b, mult));
                }
            }
        }
    }
    factors.sort_by(|x, y| (Rational::new(x.1.into(), x.0.into())).cmp(&Rational::new(y.1.into(), y.0.into())));
    (c, factors, prim)
}

fn int_poly_string(p: &IPoly) -> String {
    let mut s = String::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        if k == 0 || !mag.is_one() {
            s.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => s.push('d'),
            _ => s.push_str(&format!("d^{k}")),
        }
    }
    s
}

fn linear_string(a: i64, b: i64) -> String {
    int_poly_string(&vec![BigInt::from(-b), BigInt::from(a)])
}

/// Product form of a polynomial in `d` with its sign taken into the
/// content, e.g. `2(2d-3)`, `d(d-1)^2`, `(d+1)`. A unit content is omitted.
pub fn factor_display(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let (c, factors, residual) = factor(p);
    let mut s = String::new();
    let body_empty = factors.is_empty() && residual.len() <= 1;
    if c == -Rational::one() && !body_empty {
        s.push('-');
    } else if !c.is_one() || body_empty {
        if c.is_integer() {
            s.push_str(&format_rational(&c));
        } else {
            s.push_str(&format!("({})", format_rational(&c)));
        }
    }
    for (a, b, m) in factors {
        let lin = if a == 1 && b == 0 {
            "d".to_string()
        } else {
            format!("({})", linear_string(a, b))
        };
        s.push_str(&lin);
        if m > 1 {
            s.push_str(&format!("^{m}"));
        }
    }
    if residual.len() > 1 {
        s.push_str(&format!("({})", int_poly_string(&residual)));
    }
    s
}

fn term_symbol(symbol: &str, i: usize, j: usize) -> String {
    let g = if i == 0 { "g".to_string() } else { format!("{{g-{i}}}") };
    let d = if j == 0 { "d".to_string() } else { format!("d-{j}") };
    format!("{symbol}_{g}({d})")
}

fn coefficient_prefix(p: &QPoly) -> String {
    if p.is_one() {
        String::new()
    } else {
        format!("{} ", factor_display(p))
    }
}

pub struct PrettyRecursion<'a> {
    pub(super) rec: &'a GDRecursion,
    pub(super) symbol: &'a str,
}

impl fmt::Display for PrettyRecursion<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.rec.terms().iter();
        let Some((&(i0, j0), p0)) = terms.next() else {
            return write!(f, "0 = 0");
        };
        let flip = p0.leading().is_some_and(Signed::is_negative);
        let lhs = if flip { -p0.clone() } else { p0.clone() };
        write!(f, "{}{}", coefficient_prefix(&lhs), term_symbol(self.symbol, i0, j0))?;
        write!(f, " =")?;
        let mut first = true;
        for (&(i, j), p) in terms {
            let rhs = if flip { p.clone() } else { -p.clone() };
            let neg = rhs.leading().is_some_and(Signed::is_negative);
            let mag = if neg { -rhs } else { rhs };
            let sign = match (first, neg) {
                (true, false) => " ",
                (true, true) => " -",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            write!(
                f,
                "{sign}{}{}",
                coefficient_prefix(&mag),
                term_symbol(self.symbol, i, j)
            )?;
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn qp(cs: &[i64]) -> QPoly {
        QPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn factored_forms() {
        assert_eq!(factor_display(&qp(&[-6, 4])), "2(2d-3)");
        assert_eq!(factor_display(&qp(&[0, 1, -2, 1])), "d(d-1)^2");
        assert_eq!(factor_display(&qp(&[1, 1])), "(d+1)");
        assert_eq!(factor_display(&qp(&[3])), "3");
        assert_eq!(factor_display(&(qp(&[2, -8, 9]) * qp(&[-1, 3]))), "(3d-1)(9d^2-8d+2)");
        assert_eq!(factor_display(&qp(&[0, 0, 1])), "d^2");
    }

    #[test]
    fn monotone_typography() {
        let rec = GDRecursion::new([
            ((0, 0), qp(&[0, 1])),
            ((0, 1), qp(&[6, -4])),
            ((1, 0), qp(&[0, -1, 2, -1])),
        ])
        .unwrap();
        assert_eq!(
            rec.pretty("m").to_string(),
            "d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)"
        );
    }
}
