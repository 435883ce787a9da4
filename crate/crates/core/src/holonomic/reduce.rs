//! Lowering the order of a recurrence by exact right division.
//!
//! A candidate factor `M` is proposed from the sequence's terms, and kept
//! only when `L = Q M` holds as operators and `M` annihilates enough initial
//! terms for the left factor `Q` to force `M a = 0` everywhere.

use num_traits::Zero;

use super::{PRecurrence, RecurrenceOperator};
use crate::arith::{nullspace, Field, Polynomial, RationalFunction};
use crate::error::HolonomicError;

type Rf<K> = RationalFunction<K>;

/// Operators of order `≤ order` and degree `≤ degree` in `n` annihilating
/// `terms` (indexed from `offset`) at every index the data covers.
pub fn guess_operator<K: Field>(terms: &[K], offset: i64, order: usize, degree: usize) -> Vec<RecurrenceOperator<K>> {
    if terms.len() <= order {
        return Vec::new();
    }
    let rows: Vec<Vec<K>> = (0..terms.len() - order)
        .map(|i| {
            let n = K::from_int(offset + i as i64);
            let mut row = Vec::with_capacity((order + 1) * (degree + 1));
            for t in 0..=order {
                let mut pw = terms[i + t].clone();
                for _ in 0..=degree {
                    row.push(pw.clone());
                    pw = pw * &n;
                }
            }
            row
        })
        .collect();
    nullspace(&rows)
        .into_iter()
        .filter_map(|v| {
            let coeffs = v.chunks(degree + 1).map(|c| Polynomial::new(c.to_vec())).collect();
            RecurrenceOperator::new(coeffs).ok()
        })
        .collect()
}

/// `(Q, R)` with `L = Q M + R` and `order(R) < order(M)`, over `K(n)`.
pub fn right_divide<K: Field>(l: &RecurrenceOperator<K>, m: &RecurrenceOperator<K>) -> (Vec<Rf<K>>, Vec<Rf<K>>) {
    let mut rem: Vec<Rf<K>> = l.rational_coeffs();
    let mc = m.rational_coeffs();
    let s = m.order();
    let lead = mc[s].clone();
    let r = l.order();
    let mut q = vec![Rf::zero(); r.saturating_sub(s) + 1];
    for top in (s..=r).rev() {
        if rem[top].is_zero() {
            continue;
        }
        let k = top - s;
        let kk = K::from_int(k as i64);
        let c = rem[top].clone() / &lead.taylor_shift(&kk);
        for (j, mj) in mc.iter().enumerate() {
            rem[k + j] = rem[k + j].clone() - &(c.clone() * &mj.taylor_shift(&kk));
        }
        q[k] = c;
    }
    rem.truncate(s);
    (q, rem)
}

fn max_integer_singularity<K: Field>(q: &[Rf<K>]) -> Option<i64> {
    let mut roots = Vec::new();
    if let Some(lead) = q.iter().rev().find(|c| !c.is_zero()) {
        roots.extend(K::integer_roots(lead.num()));
    }
    for c in q {
        if !c.den().is_constant() {
            roots.extend(K::integer_roots(c.den()));
        }
    }
    roots.into_iter().max()
}

/// A lower-order recurrence for the same sequence, or `None` if no factor
/// of degree `≤ max_degree` in `n` is found.
pub fn reduce_order<K: Field>(
    rec: &PRecurrence<K>,
    max_degree: usize,
) -> Result<Option<PRecurrence<K>>, HolonomicError> {
    const SLACK: usize = 5;
    let r = rec.order();
    let offset = rec.offset();
    for s in 1..r {
        for deg in 0..=max_degree {
            let unknowns = (s + 1) * (deg + 1);
            let n_max = offset + (unknowns + SLACK + s) as i64;
            let terms = rec.unroll(n_max)?;
            for m in guess_operator(&terms, offset, s, deg) {
                if m.order() == 0 {
                    continue;
                }
                if let Some(found) = certify(rec, &m, &terms)? {
                    return Ok(Some(found));
                }
            }
        }
    }
    Ok(None)
}

fn certify<K: Field>(
    rec: &PRecurrence<K>,
    m: &RecurrenceOperator<K>,
    terms: &[K],
) -> Result<Option<PRecurrence<K>>, HolonomicError> {
    let (q, rem) = right_divide(rec.operator(), m);
    if rem.iter().any(|c| !c.is_zero()) {
        return Ok(None);
    }
    let offset = rec.offset();
    let (r, s) = (rec.order() as i64, m.order() as i64);
    let sing = max_integer_singularity(&q).unwrap_or(i64::MIN);
    let check_to = (offset + r - s - 1).max(sing + r - s);
    let m = m.normalized();
    let lead_root = K::integer_roots(m.leading()).into_iter().filter(|&n| n >= offset).max();
    let upto = (check_to + s)
        .max(offset + s - 1)
        .max(lead_root.map_or(i64::MIN, |x| x + s));
    let extra;
    let terms = if upto < offset + terms.len() as i64 {
        terms
    } else {
        extra = rec.unroll(upto)?;
        &extra[..]
    };
    let at = |n: i64| terms[(n - offset) as usize].clone();
    for n in offset..=check_to {
        if !m.apply_at(n, at).is_zero() {
            return Ok(None);
        }
    }
    let initial = terms[..=(upto - offset) as usize].to_vec();
    Ok(Some(PRecurrence::from_operator(m, offset, initial)?))
}
