//! Recurrence ↔ differential equation conversion for `A(x) = Σ a_n x^n`.

use std::fmt;

use num_traits::{One, Zero};

use super::{PRecurrence, RecurrenceOperator};
use crate::arith::{normalize_vector, Field, Polynomial};
use crate::error::HolonomicError;

/// `Σ_i P_i(x) D^i`, `D = d/dx`.
#[derive(Clone, PartialEq)]
pub struct LinearODE<K> {
    coeffs: Vec<Polynomial<K>>,
}

impl<K: Field> LinearODE<K> {
    pub fn new(mut coeffs: Vec<Polynomial<K>>) -> Result<Self, HolonomicError> {
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(HolonomicError::ZeroLeading);
        }
        Ok(LinearODE { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial<K>] {
        &self.coeffs
    }

    /// Applies the operator to a truncated power series given by its first
    /// coefficients. Entries whose value depends on unknown coefficients are
    /// dropped, so the result has the same or fewer terms.
    pub fn apply_series(&self, a: &[K]) -> Vec<K> {
        let len = a.len();
        let r = self.order();
        if len <= r {
            return Vec::new();
        }
        // D^i f has known coefficients up to len-1-i
        let known = len - r;
        let mut out = vec![K::zero(); known];
        let mut deriv: Vec<K> = a.to_vec();
        for (i, p) in self.coeffs.iter().enumerate() {
            if i > 0 {
                deriv = (1..deriv.len())
                    .map(|n| deriv[n].clone() * &K::from_int(n as i64))
                    .collect();
            }
            for (k, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (m, o) in out.iter_mut().enumerate().skip(k) {
                    if let Some(v) = deriv.get(m - k) {
                        *o = o.clone() + &(c.clone() * v);
                    }
                }
            }
        }
        out
    }

    /// Divides out the polynomial gcd of the coefficients and removes the
    /// content over `K`.
    pub fn normalized(&self) -> Self {
        let g = self.coeffs.iter().fold(Polynomial::zero(), |g, p| g.gcd(p));
        let coeffs: Vec<Polynomial<K>> = self
            .coeffs
            .iter()
            .map(|p| p.divmod(&g).expect("gcd is nonzero").0)
            .collect();
        let mut flat = Vec::new();
        for p in coeffs.iter().rev() {
            flat.extend(p.coeffs().iter().rev().cloned());
        }
        let mut it = normalize_vector(&flat).into_iter();
        let mut out = Vec::with_capacity(coeffs.len());
        for p in coeffs.iter().rev() {
            let mut cs: Vec<K> = (0..p.coeffs().len()).map(|_| it.next().expect("length")).collect();
            cs.reverse();
            out.push(Polynomial::new(cs));
        }
        out.reverse();
        LinearODE { coeffs: out }
    }

    /// `D ∘ L`.
    fn derive(&self) -> Vec<Polynomial<K>> {
        let mut out = vec![Polynomial::zero(); self.coeffs.len() + 1];
        for (i, p) in self.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + p.derivative();
            out[i + 1] = out[i + 1].clone() + p;
        }
        out
    }
}

impl<K: Field> fmt::Display for LinearODE<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{}]*D^{i}", p.display_var("x"))?;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for LinearODE<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearODE[{self}]")
    }
}

/// Stirling numbers of the second kind `S(j, k)` for `j, k ≤ n`.
fn stirling2<K: Field>(n: usize) -> Vec<Vec<K>> {
    let mut s = vec![vec![K::zero(); n + 1]; n + 1];
    s[0][0] = K::one();
    for j in 1..=n {
        for k in 1..=j {
            s[j][k] = K::from_int(k as i64) * &s[j - 1][k] + &s[j - 1][k - 1];
        }
    }
    s
}

/// An ODE for `Σ_{n ≥ offset} a_n x^n`.
///
/// The operator `L = Σ_t x^{r-t} p_t(θ - t)`, `θ = x D`, maps the series to
/// the polynomial `Q` built from the relation's failures below the offset;
/// a nonzero `Q` is removed with `Q (D L) - Q' L`.
pub fn rec_to_ode<K: Field>(rec: &PRecurrence<K>) -> Result<LinearODE<K>, HolonomicError> {
    if rec.offset() < 0 {
        return Err(HolonomicError::NegativeOffset(rec.offset()));
    }
    let op = rec.operator();
    let r = op.order();
    let deg = op.degree();
    let st = stirling2::<K>(deg);
    let mut theta_coeffs: Vec<Polynomial<K>> = vec![Polynomial::zero(); deg + 1];
    for (t, p) in op.coeffs().iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let shifted = p.taylor_shift(&K::from_int(-(t as i64)));
        for (k, row) in theta_coeffs.iter_mut().enumerate() {
            let c = shifted
                .coeffs()
                .iter()
                .enumerate()
                .skip(k)
                .fold(K::zero(), |acc, (j, cj)| acc + &(cj.clone() * &st[j][k]));
            if !c.is_zero() {
                *row = row.clone() + Polynomial::monomial(c, k + r - t);
            }
        }
    }
    let ode = LinearODE::new(theta_coeffs)?;
    let offset = rec.offset();
    let terms = rec.unroll(offset + r as i64)?;
    let a = |m: i64| -> K {
        if m < offset {
            K::zero()
        } else {
            terms[(m - offset) as usize].clone()
        }
    };
    let mut q = Polynomial::zero();
    for n in -(r as i64)..offset {
        let e = op.apply_at(n, a);
        if !e.is_zero() {
            q = q + Polynomial::monomial(e, (n + r as i64) as usize);
        }
    }
    if q.is_zero() {
        return Ok(ode.normalized());
    }
    let dq = q.derivative();
    let mut out = ode.derive();
    for p in out.iter_mut() {
        *p = p.clone() * &q;
    }
    for (i, p) in ode.coeffs().iter().enumerate() {
        out[i] = out[i].clone() - dq.clone() * p;
    }
    Ok(LinearODE::new(out)?.normalized())
}

fn falling<K: Field>(shift: i64, i: usize) -> Polynomial<K> {
    (0..i as i64).fold(Polynomial::one(), |acc, j| {
        acc * Polynomial::linear(K::from_int(shift - j))
    })
}

/// Recurrence satisfied by the coefficients of every power-series solution,
/// valid at every index once the sequence is extended by zero to negative
/// indices.
pub fn ode_to_rec<K: Field>(ode: &LinearODE<K>) -> Result<RecurrenceOperator<K>, HolonomicError> {
    let mut entries = Vec::new();
    for (i, p) in ode.coeffs().iter().enumerate() {
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                entries.push((i, k, c.clone()));
            }
        }
    }
    let smin = entries
        .iter()
        .map(|(i, k, _)| *i as i64 - *k as i64)
        .min()
        .ok_or(HolonomicError::ZeroLeading)?;
    let smax = entries
        .iter()
        .map(|(i, k, _)| *i as i64 - *k as i64)
        .max()
        .expect("nonempty");
    let mut coeffs = vec![Polynomial::zero(); (smax - smin + 1) as usize];
    for (i, k, c) in entries {
        let t = (i as i64 - k as i64 - smin) as usize;
        coeffs[t] = coeffs[t].clone() + falling::<K>(t as i64, i).scale(&c);
    }
    Ok(RecurrenceOperator::new(coeffs)?.normalized())
}
