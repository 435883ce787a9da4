//! P-recursive sequences over a field `K` (in practice `ℚ(ℏ)`): recurrences,
//! term generation, closure under sum, Hadamard and Cauchy products, and
//! conversion between recurrences and differential equations.

use std::fmt;

use num_traits::Zero;

use crate::arith::{normalize_vector, Field, Polynomial, RationalFunction};
use crate::error::HolonomicError;

mod closure;
mod ode;
mod pipeline;
mod reduce;

pub use closure::{cauchy_closure, cauchy_ode, hadamard_closure, sum_closure};
pub use ode::{ode_to_rec, rec_to_ode, LinearODE};
pub use pipeline::{one_point_pipeline, weight_in_index, ClosureChain};
pub use reduce::{guess_operator, reduce_order, right_divide};

/// The difference operator `Σ_t p_t(n) S^t`, where `S a_n = a_{n+1}`.
#[derive(Clone, PartialEq)]
pub struct RecurrenceOperator<K> {
    coeffs: Vec<Polynomial<K>>,
}

impl<K: Field> RecurrenceOperator<K> {
    pub fn new(mut coeffs: Vec<Polynomial<K>>) -> Result<Self, HolonomicError> {
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(HolonomicError::ZeroLeading);
        }
        Ok(RecurrenceOperator { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial<K>] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Polynomial<K> {
        self.coeffs.last().expect("nonzero operator")
    }

    /// Largest degree in `n` over all coefficients.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// `Σ_t p_t(n) a_{n+t}` with `a` given as a lookup.
    pub fn apply_at(&self, n: i64, a: impl Fn(i64) -> K) -> K {
        let nn = K::from_int(n);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .fold(K::zero(), |acc, (t, p)| acc + &(p.eval(&nn) * &a(n + t as i64)))
    }

    /// Content-free with a sign fixed by the leading coefficient in `n` of
    /// the leading `p_r`.
    pub fn normalized(&self) -> Self {
        let r = self.order();
        let mut flat = Vec::new();
        for p in self.coeffs.iter().rev() {
            flat.extend(p.coeffs().iter().rev().cloned());
        }
        let flat = normalize_vector(&flat);
        let mut it = flat.into_iter();
        let mut coeffs = Vec::with_capacity(r + 1);
        for p in self.coeffs.iter().rev() {
            let mut cs: Vec<K> = (0..p.coeffs().len()).map(|_| it.next().expect("length")).collect();
            cs.reverse();
            coeffs.push(Polynomial::new(cs));
        }
        coeffs.reverse();
        RecurrenceOperator { coeffs }
    }

    /// Coefficients as elements of `K(n)`.
    pub(crate) fn rational_coeffs(&self) -> Vec<RationalFunction<K>> {
        self.coeffs.iter().cloned().map(RationalFunction::from_poly).collect()
    }

    /// Integer roots `≥ from` of the leading coefficient.
    pub fn singular_indices(&self, from: i64) -> Vec<i64> {
        K::integer_roots(self.leading())
            .into_iter()
            .filter(|&n| n >= from)
            .collect()
    }
}

impl<K: Field> fmt::Display for RecurrenceOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let idx = match t {
                0 => "n".to_string(),
                t => format!("n+{t}"),
            };
            write!(f, "[{}]*a({idx})", p.display_var("n"))?;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for RecurrenceOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RecurrenceOperator[{self}]")
    }
}

/// A sequence `(a_n)_{n ≥ offset}` given by a recurrence and initial terms.
///
/// The relation `Σ_t p_t(n) a_{n+t} = 0` holds for every `n ≥ offset`; terms
/// past the initial ones are produced by solving it for the top shift.
#[derive(Clone, PartialEq)]
pub struct PRecurrence<K> {
    op: RecurrenceOperator<K>,
    offset: i64,
    initial: Vec<K>,
}

impl<K: Field> PRecurrence<K> {
    pub fn new(coeffs: Vec<Polynomial<K>>, offset: i64, initial: Vec<K>) -> Result<Self, HolonomicError> {
        Self::from_operator(RecurrenceOperator::new(coeffs)?, offset, initial)
    }

    pub fn from_operator(op: RecurrenceOperator<K>, offset: i64, initial: Vec<K>) -> Result<Self, HolonomicError> {
        if initial.len() < op.order() {
            return Err(HolonomicError::TooFewInitialTerms {
                needed: op.order(),
                got: initial.len(),
            });
        }
        Ok(PRecurrence { op, offset, initial })
    }

    pub fn operator(&self) -> &RecurrenceOperator<K> {
        &self.op
    }

    pub fn order(&self) -> usize {
        self.op.order()
    }

    pub fn coeffs(&self) -> &[Polynomial<K>] {
        self.op.coeffs()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn initial(&self) -> &[K] {
        &self.initial
    }

    /// Terms `a_offset, …, a_{n_max}`.
    pub fn unroll(&self, n_max: i64) -> Result<Vec<K>, HolonomicError> {
        let count = (n_max - self.offset + 1).max(0) as usize;
        let mut out: Vec<K> = self.initial.iter().take(count).cloned().collect();
        let r = self.order();
        let lead = self.op.leading();
        while out.len() < count {
            let m = self.offset + out.len() as i64;
            let n = m - r as i64;
            let l = lead.eval(&K::from_int(n));
            if l.is_zero() {
                return Err(HolonomicError::SingularIndex(m));
            }
            let base = out.len() - r;
            let nn = K::from_int(n);
            let mut acc = K::zero();
            for (t, p) in self.op.coeffs()[..r].iter().enumerate() {
                if !p.is_zero() {
                    acc = acc + &(p.eval(&nn) * &out[base + t]);
                }
            }
            out.push(-acc / l);
        }
        Ok(out)
    }

    /// Same sequence with initial terms reaching index `upto`.
    pub fn with_initial_upto(&self, upto: i64) -> Result<Self, HolonomicError> {
        if upto < self.offset + self.initial.len() as i64 {
            return Ok(self.clone());
        }
        let initial = self.unroll(upto)?;
        Ok(PRecurrence {
            initial,
            ..self.clone()
        })
    }

    /// Extends the sequence to start at `new_offset < offset` by solving the
    /// relation for its lowest shift.
    pub fn extend_backward(&self, new_offset: i64) -> Result<Self, HolonomicError> {
        let mut terms = self.initial.clone();
        let mut off = self.offset;
        let p0 = &self.op.coeffs()[0];
        while off > new_offset {
            let n = off - 1;
            let l = p0.eval(&K::from_int(n));
            if l.is_zero() {
                return Err(HolonomicError::SingularIndex(n));
            }
            let r = self.order();
            if terms.len() < r {
                return Err(HolonomicError::TooFewInitialTerms {
                    needed: r,
                    got: terms.len(),
                });
            }
            let nn = K::from_int(n);
            let mut acc = K::zero();
            for (t, p) in self.op.coeffs().iter().enumerate().skip(1) {
                if !p.is_zero() {
                    acc = acc + &(p.eval(&nn) * &terms[t - 1]);
                }
            }
            terms.insert(0, -acc / l);
            off = n;
        }
        Ok(PRecurrence {
            op: self.op.clone(),
            offset: off,
            initial: terms,
        })
    }

    /// First `n ≥ offset` at which the relation fails on the stored terms.
    pub fn first_violation(&self) -> Option<i64> {
        let r = self.order();
        let len = self.initial.len();
        (0..len.saturating_sub(r)).map(|i| self.offset + i as i64).find(|&n| {
            !self
                .op
                .apply_at(n, |m| self.initial[(m - self.offset) as usize].clone())
                .is_zero()
        })
    }

    pub fn normalized(&self) -> Self {
        PRecurrence {
            op: self.op.normalized(),
            ..self.clone()
        }
    }
}

impl<K: Field> fmt::Display for PRecurrence<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0 for n >= {}", self.op, self.offset)?;
        for (i, a) in self.initial.iter().enumerate() {
            write!(f, ", a({}) = {}", self.offset + i as i64, a)?;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for PRecurrence<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PRecurrence[{self}]")
    }
}

/// A sequence with rational consecutive-term ratio `a_{n+1}/a_n = ratio(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricTerm<K: Field> {
    pub ratio: RationalFunction<K>,
    pub first_index: i64,
    pub first_value: K,
}

/// `den(n) a_{n+1} - num(n) a_n = 0` for `ratio = num/den`.
pub fn from_hypergeometric<K: Field>(t: &HypergeometricTerm<K>) -> Result<PRecurrence<K>, HolonomicError> {
    if t.ratio.is_zero() {
        return Err(HolonomicError::ZeroRatio);
    }
    let coeffs = vec![-t.ratio.num().clone(), t.ratio.den().clone()];
    Ok(PRecurrence::new(coeffs, t.first_index, vec![t.first_value.clone()])?.normalized())
}
