//! Exact computation of 1-point invariants of weighted Hurwitz problems and
//! discovery of the recursions they satisfy.

pub mod arith;
pub mod error;
pub mod generator;
pub mod holonomic;
pub mod io;
pub mod oracle;
pub mod recursion;
pub mod symfunc;

pub use arith::rational::Rational;
pub use arith::{Field, LaurentSeries, Polynomial, RationalFunction};

/// Polynomials in `ℏ` over `ℚ`.
pub type QPoly = Polynomial<Rational>;
/// The coefficient field `ℚ(ℏ)`.
pub type Kh = RationalFunction<Rational>;
/// Laurent series in `ℏ` over `ℚ`.
pub type QSeries = LaurentSeries<Rational>;
