//! Closure of P-recursive sequences under sum, Hadamard product and Cauchy
//! product. Each output is found as the first linear dependence among
//! shifts (or derivatives) in a finite-dimensional space over `K(n)` (or
//! `K(x)`), then completed with initial terms and checked on them.

use num_traits::{One, Zero};

use super::ode::{ode_to_rec, rec_to_ode, LinearODE};
use super::{PRecurrence, RecurrenceOperator};
use crate::arith::{nullspace, Field, Polynomial, RationalFunction};
use crate::error::HolonomicError;

type Rf<K> = RationalFunction<K>;

/// Coordinates of `a_{n+k}` in the basis `a_n, …, a_{n+r-1}`.
struct ShiftBasis<K> {
    /// `-p_t / p_r`
    reduce: Vec<Rf<K>>,
}

impl<K: Field> ShiftBasis<K> {
    fn new(op: &RecurrenceOperator<K>) -> Self {
        let c = op.rational_coeffs();
        let lead = c.last().expect("nonzero operator").clone();
        let reduce = c[..c.len() - 1].iter().map(|p| -(p.clone() / &lead)).collect();
        ShiftBasis { reduce }
    }

    fn dim(&self) -> usize {
        self.reduce.len()
    }

    fn start(&self) -> Vec<Rf<K>> {
        let mut v = vec![Rf::zero(); self.dim()];
        if let Some(first) = v.first_mut() {
            *first = Rf::one();
        }
        v
    }

    fn shift(&self, w: &[Rf<K>]) -> Vec<Rf<K>> {
        let r = self.dim();
        let mut out = vec![Rf::zero(); r];
        if r == 0 {
            return out;
        }
        let one = K::one();
        for j in 0..r - 1 {
            out[j + 1] = w[j].taylor_shift(&one);
        }
        let top = w[r - 1].taylor_shift(&one);
        if !top.is_zero() {
            for (o, c) in out.iter_mut().zip(&self.reduce) {
                *o = o.clone() + &(top.clone() * c);
            }
        }
        out
    }
}

/// Smallest `k` with `v_0, …, v_k` linearly dependent, and the dependence
/// normalized so that `λ_k = 1`.
fn first_dependence<F: Field>(mut v: Vec<F>, mut next: impl FnMut(&[F]) -> Vec<F>) -> Result<Vec<F>, HolonomicError> {
    let dim = v.len();
    let mut cols: Vec<Vec<F>> = Vec::new();
    loop {
        cols.push(v.clone());
        let k = cols.len();
        if dim == 0 || cols.last().is_some_and(|c| c.iter().all(Zero::is_zero)) {
            let mut lam = vec![F::zero(); k];
            lam[k - 1] = F::one();
            return Ok(lam);
        }
        let m: Vec<Vec<F>> = (0..dim).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        if let Some(lam) = nullspace(&m).into_iter().next() {
            return Ok(lam);
        }
        if k > dim {
            return Err(HolonomicError::NoDependence(dim));
        }
        v = next(&v);
    }
}

/// Multiplies through by the common denominator.
fn clear_denominators<K: Field>(lam: &[Rf<K>]) -> Vec<Polynomial<K>> {
    let l = lam.iter().fold(Polynomial::one(), |acc, x| acc.lcm(x.den()));
    lam.iter()
        .map(|x| {
            let (q, _) = l.divmod(x.den()).expect("lcm divisible");
            q * x.num()
        })
        .collect()
}

fn max_root<K: Field>(p: &Polynomial<K>, from: i64) -> Option<i64> {
    K::integer_roots(p).into_iter().filter(|&n| n >= from).max()
}

/// Attaches initial terms to a certified operator.
///
/// `certified_from` is the first index beyond which the derivation holds
/// unconditionally; the relation is checked directly below it and the
/// offset is raised past any failure.
fn complete<K: Field>(
    op: RecurrenceOperator<K>,
    offset: i64,
    certified_from: i64,
    term: impl Fn(i64) -> Result<Vec<K>, HolonomicError>,
) -> Result<PRecurrence<K>, HolonomicError> {
    let op = op.normalized();
    let r = op.order() as i64;
    let lead_root = max_root(op.leading(), offset);
    let upto = [
        offset + r - 1,
        certified_from + r,
        lead_root.map_or(i64::MIN, |x| x + r),
    ]
    .into_iter()
    .max()
    .expect("nonempty");
    let terms = term(upto)?;
    let at = |m: i64| terms[(m - offset) as usize].clone();
    let mut start = offset;
    for n in offset..certified_from.min(upto - r + 1) {
        if !op.apply_at(n, at).is_zero() {
            start = n + 1;
        }
    }
    let lead_root = max_root(op.leading(), start);
    let upto = upto.max(start + r - 1).max(lead_root.map_or(i64::MIN, |x| x + r));
    let terms = term(upto)?;
    let initial = terms[(start - offset) as usize..].to_vec();
    PRecurrence::from_operator(op, start, initial)
}

fn singular_bound<K: Field>(recs: &[&PRecurrence<K>]) -> i64 {
    recs.iter()
        .map(|a| max_root(a.operator().leading(), a.offset()).map_or(a.offset(), |x| x.max(a.offset() - 1) + 1))
        .max()
        .expect("nonempty")
}

fn operator_from<K: Field>(lam: &[Rf<K>]) -> Result<RecurrenceOperator<K>, HolonomicError> {
    RecurrenceOperator::new(clear_denominators(lam))
}

/// Recurrence for `a_n + b_n`, `n ≥ max(offsets)`.
pub fn sum_closure<K: Field>(a: &PRecurrence<K>, b: &PRecurrence<K>) -> Result<PRecurrence<K>, HolonomicError> {
    let (ba, bb) = (ShiftBasis::new(a.operator()), ShiftBasis::new(b.operator()));
    let ra = ba.dim();
    let mut v = ba.start();
    v.extend(bb.start());
    let lam = first_dependence(v, |w| {
        let mut out = ba.shift(&w[..ra]);
        out.extend(bb.shift(&w[ra..]));
        out
    })?;
    let op = operator_from(&lam)?;
    let offset = a.offset().max(b.offset());
    let certified = singular_bound(&[a, b]).max(offset);
    complete(op, offset, certified, |upto| {
        let (ta, tb) = (a.unroll(upto)?, b.unroll(upto)?);
        Ok((offset..=upto)
            .map(|m| ta[(m - a.offset()) as usize].clone() + &tb[(m - b.offset()) as usize])
            .collect())
    })
}

/// Recurrence for `a_n b_n`, `n ≥ max(offsets)`.
pub fn hadamard_closure<K: Field>(a: &PRecurrence<K>, b: &PRecurrence<K>) -> Result<PRecurrence<K>, HolonomicError> {
    let (ba, bb) = (ShiftBasis::new(a.operator()), ShiftBasis::new(b.operator()));
    let outer = |x: &[Rf<K>], y: &[Rf<K>]| -> Vec<Rf<K>> {
        x.iter().flat_map(|p| y.iter().map(move |q| p.clone() * q)).collect()
    };
    let va = ba.start();
    let vb = bb.start();
    // track the two factors separately; the dependence is over their product
    let mut state = (va.clone(), vb.clone());
    let lam = first_dependence(outer(&va, &vb), |_| {
        state = (ba.shift(&state.0), bb.shift(&state.1));
        outer(&state.0, &state.1)
    })?;
    let op = operator_from(&lam)?;
    let offset = a.offset().max(b.offset());
    let certified = singular_bound(&[a, b]).max(offset);
    complete(op, offset, certified, |upto| {
        let (ta, tb) = (a.unroll(upto)?, b.unroll(upto)?);
        Ok((offset..=upto)
            .map(|m| ta[(m - a.offset()) as usize].clone() * &tb[(m - b.offset()) as usize])
            .collect())
    })
}

/// Coordinates of `(AB)^{(k)}` in the basis `A^{(i)} B^{(j)}` over `K(x)`.
struct DerivBasis<K> {
    /// `-P_i / P_r` for each factor
    ra: Vec<Rf<K>>,
    rb: Vec<Rf<K>>,
}

impl<K: Field> DerivBasis<K> {
    fn reduction(ode: &LinearODE<K>) -> Vec<Rf<K>> {
        let c: Vec<Rf<K>> = ode.coeffs().iter().cloned().map(Rf::from_poly).collect();
        let lead = c.last().expect("nonzero").clone();
        c[..c.len() - 1].iter().map(|p| -(p.clone() / &lead)).collect()
    }

    fn derive(&self, m: &[Rf<K>]) -> Vec<Rf<K>> {
        let (na, nb) = (self.ra.len(), self.rb.len());
        let mut out = vec![Rf::zero(); na * nb];
        let mut add = |i: usize, j: usize, c: Rf<K>| {
            out[i * nb + j] = out[i * nb + j].clone() + &c;
        };
        for i in 0..na {
            for j in 0..nb {
                let c = &m[i * nb + j];
                if c.is_zero() {
                    continue;
                }
                add(i, j, c.derivative());
                if i + 1 < na {
                    add(i + 1, j, c.clone());
                } else {
                    for (ii, red) in self.ra.iter().enumerate() {
                        add(ii, j, c.clone() * red);
                    }
                }
                if j + 1 < nb {
                    add(i, j + 1, c.clone());
                } else {
                    for (jj, red) in self.rb.iter().enumerate() {
                        add(i, jj, c.clone() * red);
                    }
                }
            }
        }
        out
    }
}

/// ODE for `A(x)B(x)`, of order at most the product of the orders of the
/// ODEs of `A` and `B`.
pub fn cauchy_ode<K: Field>(a: &PRecurrence<K>, b: &PRecurrence<K>) -> Result<LinearODE<K>, HolonomicError> {
    let (oa, ob) = (rec_to_ode(a)?, rec_to_ode(b)?);
    let basis = DerivBasis {
        ra: DerivBasis::reduction(&oa),
        rb: DerivBasis::reduction(&ob),
    };
    let mut start = vec![Rf::zero(); basis.ra.len() * basis.rb.len()];
    start[0] = Rf::one();
    let lam = first_dependence(start, |m| basis.derive(m))?;
    Ok(LinearODE::new(clear_denominators(&lam))?.normalized())
}

/// Recurrence for `c_n = Σ_k a_k b_{n-k}` with both inputs extended by zero
/// below their offsets, which must be nonnegative.
pub fn cauchy_closure<K: Field>(a: &PRecurrence<K>, b: &PRecurrence<K>) -> Result<PRecurrence<K>, HolonomicError> {
    let op = ode_to_rec(&cauchy_ode(a, b)?)?;
    let (sa, sb) = (a.offset(), b.offset());
    complete(op, 0, 0, |upto| {
        let (ta, tb) = (a.unroll(upto)?, b.unroll(upto)?);
        fn get<K>(t: &[K], off: i64, m: i64) -> Option<&K> {
            if m < off {
                None
            } else {
                t.get((m - off) as usize)
            }
        }
        Ok((0..=upto)
            .map(|n| {
                (0..=n).fold(K::zero(), |acc, k| match (get(&ta, sa, k), get(&tb, sb, n - k)) {
                    (Some(x), Some(y)) => acc + &(x.clone() * y),
                    _ => acc,
                })
            })
            .collect())
    })
}
