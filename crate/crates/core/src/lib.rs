//! Exact computations for the low-rank isogenies
//! `SL(2,C) x SL(2,C) -> SO(4,C)` and `SL(4,C) -> SO(6,C)` on Higgs bundles:
//! the Lie-level maps, induced maps on Hitchin bases, fiberwise models of
//! spectral covers and Prym divisors, and the topological-invariant
//! bookkeeping for the split real forms.
//!
//! The algebra is generic over a commutative [`Ring`]; the aliases below fix
//! the concrete rings used throughout (rationals, and polynomials over them
//! in the base coordinate `z` and the fiber coordinate `η`).

pub mod algebra;
pub mod covers;
pub mod error;
pub mod higgs;
pub mod invariants;
pub mod json;
pub mod lie;
pub mod spectral;
pub mod verify;

pub use algebra::{ExactDiv, ExactSqrt, Field, Matrix, Poly, RationalAlgebra, Ring};
pub use error::{Error, Result};

/// Exact scalar: an arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
/// Polynomial in one variable over the rationals (a section in the chart
/// coordinate `z`, or a polynomial in `η`).
pub type QPoly = Poly<Rational>;
/// Polynomial in `η` whose coefficients are polynomials in `z`.
pub type CurvePoly = Poly<QPoly>;
pub type QMatrix = Matrix<Rational>;
pub type PolyMatrix = Matrix<QPoly>;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
