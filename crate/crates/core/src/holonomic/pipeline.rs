//! The closure route to a 1-point recursion for `q = (1)`: the series
//! `ℏ² n(d)` is the Hadamard product of `1/d` with the convolution of two
//! hypergeometric sequences built from `G`.

use num_traits::{One, Zero};

use super::{cauchy_closure, from_hypergeometric, hadamard_closure, reduce_order, HypergeometricTerm, PRecurrence};
use crate::arith::rational::int;
use crate::arith::{Polynomial, RationalFunction};
use crate::error::HolonomicError;
use crate::generator::WeightFunction;
use crate::{Kh, QPoly};

/// Numerator and denominator of `G(c (k + s) ℏ)` as polynomials in `k`.
pub fn weight_in_index(g: &WeightFunction, c: i64, s: i64) -> Result<(Polynomial<Kh>, Polynomial<Kh>), HolonomicError> {
    let WeightFunction::Rational { num, den } = g else {
        return Err(HolonomicError::ExponentialUnsupported);
    };
    let lift = |p: &QPoly| -> Polynomial<Kh> {
        let scale = Kh::from_poly(QPoly::monomial(int(c), 1));
        let mut pw = Kh::one();
        let mut out = Vec::with_capacity(p.coeffs().len());
        for a in p.coeffs() {
            out.push(Kh::constant(a.clone()) * &pw);
            pw = pw * &scale;
        }
        Polynomial::new(out).taylor_shift(&Kh::constant(int(s)))
    };
    Ok((lift(num), lift(den)))
}

/// Every stage of the pipeline, for display.
#[derive(Clone, Debug)]
pub struct ClosureChain {
    /// `u_{k+1}/u_k = G(kℏ)/(kℏ)`, `u_0 = 0`, `u_1 = 1`
    pub u: PRecurrence<Kh>,
    /// `v_{k+1}/v_k = -G(-(k+1)ℏ)/((k+1)ℏ)`, `v_1 = -G(-ℏ)`
    pub v: PRecurrence<Kh>,
    pub convolution: PRecurrence<Kh>,
    /// `1/d`
    pub reciprocal: PRecurrence<Kh>,
    pub hadamard: PRecurrence<Kh>,
    /// Order-reduced form of `hadamard`, when a right factor exists.
    pub reduced: Option<PRecurrence<Kh>>,
}

impl ClosureChain {
    pub fn result(&self) -> &PRecurrence<Kh> {
        self.reduced.as_ref().unwrap_or(&self.hadamard)
    }
}

fn kvar() -> Polynomial<Kh> {
    Polynomial::x()
}

pub fn one_point_pipeline(g: &WeightFunction) -> Result<ClosureChain, HolonomicError> {
    let h = Kh::var();
    let (un, ud) = weight_in_index(g, 1, 0)?;
    let u_ratio = RationalFunction::new(un, kvar().scale(&h) * &ud).map_err(|_| HolonomicError::ZeroRatio)?;
    let u = from_hypergeometric(&HypergeometricTerm {
        ratio: u_ratio,
        first_index: 1,
        first_value: Kh::one(),
    })?
    .extend_backward(0)?;

    let (vn, vd) = weight_in_index(g, -1, 1)?;
    let k1 = Polynomial::linear(Kh::one()).scale(&h);
    let v_ratio = RationalFunction::new(-vn, k1 * &vd).map_err(|_| HolonomicError::ZeroRatio)?;
    let g_minus = g.at_multiple(-1).map_err(|_| HolonomicError::ExponentialUnsupported)?;
    let v = from_hypergeometric(&HypergeometricTerm {
        ratio: v_ratio,
        first_index: 1,
        first_value: -g_minus,
    })?
    .extend_backward(0)?;

    let convolution = cauchy_closure(&u, &v)?;
    let rec_ratio =
        RationalFunction::new(kvar(), Polynomial::linear(Kh::one())).map_err(|_| HolonomicError::ZeroRatio)?;
    let reciprocal = from_hypergeometric(&HypergeometricTerm {
        ratio: rec_ratio,
        first_index: 1,
        first_value: Kh::one(),
    })?;
    let hadamard = hadamard_closure(&convolution, &reciprocal)?;
    let reduced = reduce_order(&hadamard, hadamard.operator().degree())?;
    debug_assert!(reduced.as_ref().is_none_or(|r| !r.initial().iter().all(Zero::is_zero)));
    Ok(ClosureChain {
        u,
        v,
        convolution,
        reciprocal,
        hadamard,
        reduced,
    })
}
