//! Symmetric functions specialised at power sums `p_k = q_k / ℏ`.
//!
//! Laurent polynomials in `ℏ` are returned as exact [`LaurentSeries`].

use num_traits::{One, Zero};

use crate::arith::rational::{binomial, factorial, int, Rational};
use crate::arith::{LaurentSeries, Polynomial};
use crate::error::SymfuncError;

type LPoly = LaurentSeries<Rational>;

/// Finite weight vector `(q_1, …, q_r)`; later entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    q: Vec<Rational>,
}

impl WeightVector {
    pub fn new(q: Vec<Rational>) -> Self {
        assert!(!q.is_empty(), "weight vector needs at least one entry");
        WeightVector { q }
    }

    pub fn from_ints(q: &[i64]) -> Self {
        Self::new(q.iter().map(|&x| int(x)).collect())
    }

    /// `e_k`, the k-th unit vector (1-based).
    pub fn unit(k: usize) -> Self {
        let mut q = vec![Rational::zero(); k];
        q[k - 1] = Rational::one();
        Self::new(q)
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `q_k` for `k ≥ 1`, zero past the declared length.
    pub fn get(&self, k: usize) -> Rational {
        if k == 0 || k > self.q.len() {
            Rational::zero()
        } else {
            self.q[k - 1].clone()
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.q
    }

    /// Indices with a nonzero weight.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.q
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i + 1)
    }
}

/// Hook partition `(k, 1^{d-k})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookIndex {
    pub d: i64,
    pub k: i64,
}

impl HookIndex {
    pub fn new(d: i64, k: i64) -> Result<Self, SymfuncError> {
        if d < 1 || k < 1 || k > d {
            return Err(SymfuncError::InvalidHook { d, k });
        }
        Ok(HookIndex { d, k })
    }

    pub fn contents(&self) -> impl Iterator<Item = i64> {
        let (d, k) = (self.d, self.k);
        (1..=d).map(move |i| k - i)
    }
}

/// `h_0..h_{n_max}` and `e_0..e_{n_max}` at `p_k = q_k/ℏ`.
pub fn hom_and_elem(q: &WeightVector, n_max: usize) -> (Vec<LPoly>, Vec<LPoly>) {
    let r = q.len();
    let mut h = vec![LPoly::one()];
    let mut e = vec![LPoly::one()];
    for n in 1..=n_max {
        let mut hn = LPoly::zero();
        let mut en = LPoly::zero();
        for k in 1..=n.min(r) {
            let qk = q.get(k);
            if qk.is_zero() {
                continue;
            }
            let pk = LPoly::monomial(qk, -1);
            hn = hn + &(pk.clone() * &h[n - k]);
            let t = pk * &e[n - k];
            en = if k % 2 == 1 { en + &t } else { en - &t };
        }
        let inv = Rational::new(1.into(), (n as i64).into());
        h.push(hn.scale(&inv));
        e.push(en.scale(&inv));
    }
    (h, e)
}

/// `s_{(k,1^{d-k})}(q/ℏ)` from precomputed `h`, `e` (each of length > d).
pub fn hook_schur_from(idx: HookIndex, h: &[LPoly], e: &[LPoly]) -> LPoly {
    let (d, k) = (idx.d as usize, idx.k as usize);
    let mut s = LPoly::zero();
    for j in 1..=k {
        let t = h[k - j].clone() * &e[d - k + j];
        s = if j % 2 == 1 { s + &t } else { s - &t };
    }
    s
}

pub fn hook_schur(idx: HookIndex, q: &WeightVector) -> LPoly {
    let (h, e) = hom_and_elem(q, idx.d as usize);
    hook_schur_from(idx, &h, &e)
}

/// `C(d-1, k-1)/d!`, the coefficient of `s^d` in `s_{(k,1^{d-k})}(s, 0, 0, …)`.
pub fn hook_schur_simple(idx: HookIndex) -> Rational {
    Rational::new(binomial(idx.d - 1, idx.k - 1), factorial(idx.d as u64))
}

fn check_partition(lambda: &[i64]) -> Result<(), SymfuncError> {
    let ok = lambda.iter().all(|&x| x > 0) && lambda.windows(2).all(|w| w[0] >= w[1]);
    if ok {
        Ok(())
    } else {
        Err(SymfuncError::MalformedPartition(lambda.to_vec()))
    }
}

pub fn is_hook(lambda: &[i64]) -> bool {
    !lambda.is_empty() && lambda.get(1).is_none_or(|&x| x <= 1)
}

/// `[∂/∂s s_λ(s, s, …)]_{s=0}` by the hook-content formula.
pub fn principal_spec_derivative(lambda: &[i64]) -> Result<Rational, SymfuncError> {
    check_partition(lambda)?;
    let mut prod = Polynomial::<Rational>::one();
    let mut hooks = num_bigint::BigInt::one();
    let conj = conjugate(lambda);
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row as usize) {
            let content = j as i64 - i as i64;
            prod = prod * Polynomial::linear(int(content));
            let arm = row - 1 - j as i64;
            let leg = col - 1 - i as i64;
            hooks *= arm + leg + 1;
        }
    }
    Ok(prod.coeff(1) / Rational::from_integer(hooks))
}

fn conjugate(lambda: &[i64]) -> Vec<i64> {
    let width = lambda.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| lambda.iter().filter(|&&x| x >= c).count() as i64)
        .collect()
}
