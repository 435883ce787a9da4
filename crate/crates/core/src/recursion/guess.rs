//! Guessing `ℏ`-level relations from exact series values.

use super::{relabelled_sequence, GDRecursion, HLevelRelation};
use crate::arith::{nullspace, Polynomial, Ring};
use crate::error::RecursionError;
use crate::generator::ProblemSpec;
use crate::Kh;

/// Held-out equations used only for verification.
pub const DEFAULT_BUFFER: usize = 5;

/// Relations `Σ_{j ≤ R} Σ_{i ≤ D} a_ij d^i n(d-j) = 0` fitted on
/// `d = R+1 ..= N-V` and verified on every `d ≤ N`; `seq[k] = n(k+1)`.
pub fn guess(seq: &[Kh], r: usize, deg: usize, buffer: usize) -> Result<Vec<HLevelRelation>, RecursionError> {
    let n = seq.len();
    let unknowns = (r + 1) * (deg + 1);
    let needed = unknowns + r + buffer;
    if n < needed {
        return Err(RecursionError::InsufficientData { needed, got: n });
    }
    let rows: Vec<Vec<Kh>> = (r + 1..=n - buffer)
        .map(|d| {
            let dd = Kh::from_int(d as i64);
            let mut row = Vec::with_capacity(unknowns);
            for j in 0..=r {
                let mut x = seq[d - j - 1].clone();
                for _ in 0..=deg {
                    row.push(x.clone());
                    x = x * &dd;
                }
            }
            row
        })
        .collect();
    let mut out: Vec<HLevelRelation> = Vec::new();
    for v in nullspace(&rows) {
        let coeffs = v.chunks(deg + 1).map(|c| Polynomial::new(c.to_vec())).collect();
        let rel = HLevelRelation::new(coeffs)?;
        if rel.first_failure(seq, 1, n as i64).is_none() && !out.contains(&rel) {
            out.push(rel);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    InsufficientData,
    NoRelation,
    Found(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchStep {
    pub order: usize,
    pub degree: usize,
    pub status: SearchStatus,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub relation: Option<HLevelRelation>,
    pub gd_forms: Vec<GDRecursion>,
    pub trace: Vec<SearchStep>,
}

/// First `(R, D)` in increasing `R`, then `D`, at which `guess` succeeds on
/// the relabelled series `n(s·d)`, `d ≤ n_terms`. Among several relations
/// the one with least `(R, deg_d, deg_ℏ)` is kept.
pub fn search_minimal(
    p: &ProblemSpec,
    r_max: usize,
    d_max: usize,
    n_terms: usize,
    buffer: usize,
) -> Result<SearchOutcome, RecursionError> {
    let seq = relabelled_sequence(p, n_terms as i64)?;
    let mut trace = Vec::new();
    for r in 0..=r_max {
        for deg in 0..=d_max {
            let found = match guess(&seq, r, deg, buffer) {
                Err(RecursionError::InsufficientData { .. }) => {
                    trace.push(SearchStep {
                        order: r,
                        degree: deg,
                        status: SearchStatus::InsufficientData,
                    });
                    continue;
                }
                other => other?,
            };
            if found.is_empty() {
                trace.push(SearchStep {
                    order: r,
                    degree: deg,
                    status: SearchStatus::NoRelation,
                });
                continue;
            }
            trace.push(SearchStep {
                order: r,
                degree: deg,
                status: SearchStatus::Found(found.len()),
            });
            let best = found
                .into_iter()
                .min_by_key(|rel| (rel.span(), rel.degree_d(), rel.degree_h()))
                .expect("nonempty");
            let gd_forms = best.to_gd_form()?;
            return Ok(SearchOutcome {
                relation: Some(best),
                gd_forms,
                trace,
            });
        }
    }
    Ok(SearchOutcome {
        relation: None,
        gd_forms: Vec::new(),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn constant_series() {
        let seq = vec![Kh::var_pow(-1); 12];
        let rels = guess(&seq, 1, 0, DEFAULT_BUFFER).unwrap();
        assert_eq!(rels.len(), 1);
        let one = Polynomial::constant(Kh::from_int(1));
        assert_eq!(rels[0], HLevelRelation::new(vec![one.clone(), -one]).unwrap());
        assert!(!rels[0].coeffs().iter().all(Zero::is_zero));
    }

    #[test]
    fn insufficient() {
        let seq = vec![Kh::var_pow(-1); 3];
        assert_eq!(
            guess(&seq, 1, 1, DEFAULT_BUFFER),
            Err(RecursionError::InsufficientData { needed: 10, got: 3 })
        );
    }
}
