//! 1-point recursions: `ℏ`-level relations `Σ_j c_j(d, ℏ) n(d-j) = 0` and
//! their `(g, d)` form `Σ_{i,j} p_ij(d) n_{g-i}(d-j) = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::rational::Rational;
use crate::arith::{normalize_vector, Polynomial, Ring};
use crate::error::RecursionError;
use crate::generator::{one_point_series, InvariantTable, ProblemSpec};
use crate::holonomic::RecurrenceOperator;
use crate::{Kh, QPoly};

mod catalog;
mod diagnostic;
mod guess;
mod pretty;

pub use catalog::{catalog_recursion, catalog_recursions, NamedRecursion};
pub use diagnostic::{no_recursion_diagnostic, DiagnosticReport};
pub use guess::{guess, search_minimal, SearchOutcome, SearchStatus, SearchStep, DEFAULT_BUFFER};
pub use pretty::{factor_display, PrettyRecursion};

/// `Σ_{j=0}^R c_j(d) n(d-j) = 0` with `c_j ∈ ℚ[ℏ][d]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HLevelRelation {
    coeffs: Vec<Polynomial<Kh>>,
}

impl HLevelRelation {
    /// Normalizes: the common factor in `d` over `ℚ(ℏ)` and the content in
    /// `ℚ[ℏ]` are removed, and the sign fixed by the top `d`-coefficient of
    /// the first nonzero `c_j`.
    pub fn new(mut coeffs: Vec<Polynomial<Kh>>) -> Result<Self, RecursionError> {
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(RecursionError::ZeroRelation);
        }
        let g = coeffs.iter().fold(Polynomial::zero(), |g, c| g.gcd(c));
        let coeffs: Vec<Polynomial<Kh>> = coeffs.iter().map(|c| c.divmod(&g).expect("gcd divides").0).collect();
        let mut flat = Vec::new();
        for c in &coeffs {
            flat.extend(c.coeffs().iter().rev().cloned());
        }
        let mut it = normalize_vector(&flat).into_iter();
        let coeffs = coeffs
            .iter()
            .map(|c| {
                let mut cs: Vec<Kh> = (0..c.coeffs().len()).map(|_| it.next().expect("length")).collect();
                cs.reverse();
                Polynomial::new(cs)
            })
            .collect();
        Ok(HLevelRelation { coeffs })
    }

    /// From `Σ_t p_t(n) a(n+t) = 0`, substituting `d = n + r`.
    pub fn from_operator(op: &RecurrenceOperator<Kh>) -> Result<Self, RecursionError> {
        let r = op.order();
        let shift = Kh::from_int(-(r as i64));
        let coeffs = (0..=r).map(|j| op.coeffs()[r - j].taylor_shift(&shift)).collect();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Polynomial<Kh>] {
        &self.coeffs
    }

    /// `R`, the largest shift.
    pub fn span(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn degree_d(&self) -> usize {
        self.coeffs.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn degree_h(&self) -> usize {
        self.coeffs
            .iter()
            .flat_map(|c| c.coeffs().iter())
            .filter_map(|x| x.num().degree())
            .max()
            .unwrap_or(0)
    }

    /// `Σ_j c_j(d) n(d-j)` with `n` indexed from 1.
    pub fn residual(&self, d: i64, n: impl Fn(i64) -> Kh) -> Kh {
        let dd = Kh::from_int(d);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Kh::zero(), |acc, (j, c)| acc + &(c.eval(&dd) * &n(d - j as i64)))
    }

    /// First `d` in `from..=to` (with every `n(d-j)` defined) where the
    /// relation fails on `seq = [n(1), n(2), …]`.
    pub fn first_failure(&self, seq: &[Kh], from: i64, to: i64) -> Option<i64> {
        let lo = from.max(self.span() as i64 + 1);
        let hi = to.min(seq.len() as i64);
        (lo..=hi).find(|&d| !self.residual(d, |m| seq[(m - 1) as usize].clone()).is_zero())
    }

    /// One recursion per nonzero `ℏ`-parity class.
    pub fn to_gd_form(&self) -> Result<Vec<GDRecursion>, RecursionError> {
        let mut classes: [BTreeMap<(usize, usize), Vec<Rational>>; 2] = Default::default();
        for (j, c) in self.coeffs.iter().enumerate() {
            for (k, x) in c.coeffs().iter().enumerate() {
                debug_assert!(x.den().is_one(), "content-free relations are polynomial in ℏ");
                for (m, a) in x.num().coeffs().iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let v = classes[m % 2].entry((m / 2, j)).or_default();
                    if v.len() <= k {
                        v.resize(k + 1, Rational::zero());
                    }
                    v[k] = v[k].clone() + a;
                }
            }
        }
        let out: Vec<GDRecursion> = classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| GDRecursion::new(c.into_iter().map(|(k, v)| (k, QPoly::new(v)))))
            .collect::<Result<_, _>>()?;
        if out.is_empty() {
            return Err(RecursionError::ZeroRelation);
        }
        Ok(out)
    }
}

impl fmt::Display for HLevelRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let arg = if j == 0 { "d".to_string() } else { format!("d-{j}") };
            write!(f, "[")?;
            let mut first_term = true;
            for (k, x) in c.coeffs().iter().enumerate().rev() {
                if x.is_zero() {
                    continue;
                }
                if !first_term {
                    write!(f, " + ")?;
                }
                first_term = false;
                match k {
                    0 => write!(f, "({x})")?,
                    1 => write!(f, "({x})*d")?,
                    _ => write!(f, "({x})*d^{k}")?,
                }
            }
            write!(f, "]*n({arg})")?;
        }
        write!(f, " = 0")
    }
}

impl fmt::Debug for HLevelRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HLevelRelation[{self}]")
    }
}

/// `Σ_{i,j} p_ij(d) n_{g-i}(d-j) = 0`, normalized by the gcd of the `p_ij`
/// and their rational content, with `p` at the first `(i, j)` positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GDRecursion {
    terms: BTreeMap<(usize, usize), QPoly>,
}

impl GDRecursion {
    pub fn new(terms: impl IntoIterator<Item = ((usize, usize), QPoly)>) -> Result<Self, RecursionError> {
        let terms: BTreeMap<(usize, usize), QPoly> = terms.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        if terms.is_empty() {
            return Err(RecursionError::ZeroRelation);
        }
        let g = terms.values().fold(QPoly::zero(), |g, p| g.gcd(p));
        let divided: Vec<((usize, usize), QPoly)> = terms
            .into_iter()
            .map(|(k, p)| (k, p.divmod(&g).expect("gcd divides").0))
            .collect();
        let mut flat = Vec::new();
        for (_, p) in &divided {
            flat.extend(p.coeffs().iter().rev().cloned());
        }
        let mut it = normalize_vector(&flat).into_iter();
        let terms = divided
            .into_iter()
            .map(|(k, p)| {
                let mut cs: Vec<Rational> = (0..p.coeffs().len()).map(|_| it.next().expect("length")).collect();
                cs.reverse();
                (k, QPoly::new(cs))
            })
            .collect();
        Ok(GDRecursion { terms })
    }

    /// Parses `(i, j, [coefficients of d^0, d^1, …])` triples.
    pub fn from_int_terms(terms: &[(usize, usize, QPoly)]) -> Result<Self, RecursionError> {
        Self::new(terms.iter().map(|(i, j, p)| ((*i, *j), p.clone())))
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), QPoly> {
        &self.terms
    }

    pub fn i_max(&self) -> usize {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn j_max(&self) -> usize {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn p(&self, i: usize, j: usize) -> QPoly {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(QPoly::zero)
    }

    /// `c_j(d) = Σ_i ℏ^{2i} p_ij(d)`.
    pub fn lift(&self) -> Result<HLevelRelation, RecursionError> {
        let mut coeffs = vec![Polynomial::<Kh>::zero(); self.j_max() + 1];
        for (&(i, j), p) in &self.terms {
            let h2i = Kh::var_pow(2 * i as i64);
            let lifted = Polynomial::new(p.coeffs().iter().map(|a| Kh::constant(a.clone()) * &h2i).collect());
            coeffs[j] = coeffs[j].clone() + lifted;
        }
        HLevelRelation::new(coeffs)
    }

    /// Value of the left side at `(g, d)`, or `None` if some term falls
    /// outside the table or outside `g ≥ 0, d ≥ 1`.
    pub fn residual(&self, table: &InvariantTable, g: i64, d: i64) -> Option<Rational> {
        let dd = Rational::from_integer(d.into());
        let mut acc = Rational::zero();
        for (&(i, j), p) in &self.terms {
            let (gg, ds) = (g - i as i64, d - j as i64);
            if gg < 0 || ds < 1 {
                return None;
            }
            acc += p.eval(&dd) * table.get(gg, ds)?;
        }
        Some(acc)
    }

    /// Every `(g, d)` of the table at which the relation is defined and
    /// fails, in `(d, g)` order; also returns how many points were checked.
    pub fn check_table(&self, table: &InvariantTable) -> (usize, Vec<(i64, i64)>) {
        let mut checked = 0;
        let mut failures = Vec::new();
        for d in 1..=table.d_max {
            for g in 0..=table.g_max {
                if let Some(r) = self.residual(table, g, d) {
                    checked += 1;
                    if !r.is_zero() {
                        failures.push((g, d));
                    }
                }
            }
        }
        (checked, failures)
    }

    pub fn pretty<'a>(&'a self, symbol: &'a str) -> PrettyRecursion<'a> {
        PrettyRecursion { rec: self, symbol }
    }

    /// Equality after dividing both by the gcd of their coefficients.
    pub fn equivalent(&self, other: &GDRecursion) -> bool {
        self == other
    }
}

impl fmt::Display for GDRecursion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty("n"))
    }
}

impl fmt::Debug for GDRecursion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GDRecursion[{self}]")
    }
}

/// `n(s·d)` for `d = 1..=n_terms`, `s` the problem's stride.
pub fn relabelled_sequence(p: &ProblemSpec, n_terms: i64) -> Result<Vec<Kh>, RecursionError> {
    if !p.is_rational() {
        return Err(RecursionError::ExponentialUnsupported);
    }
    let s = p.stride() as i64;
    (1..=n_terms)
        .map(|d| {
            let v = one_point_series(p, s * d, 0)?;
            Ok(v.value.as_exact().expect("rational weight gives exact values").clone())
        })
        .collect()
}

/// Exact check of `rel` on the relabelled series of `p` over `from..=to`.
/// Returns the first failing `d`, if any.
pub fn verify(rel: &HLevelRelation, p: &ProblemSpec, from: i64, to: i64) -> Result<Option<i64>, RecursionError> {
    let seq = relabelled_sequence(p, to)?;
    Ok(rel.first_failure(&seq, from, to))
}
