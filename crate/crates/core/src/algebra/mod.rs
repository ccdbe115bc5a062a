//! Exact scalar, polynomial and matrix kernels.
//!
//! Everything here is generic over a commutative [`Ring`]. The ring traits
//! are thin layers over `num-traits`, so the same code runs on `i64`,
//! `BigInt`, `BigRational`, `f64`, and on polynomials over any of those.

mod matrix;
mod poly;
mod rational;

pub use matrix::{wedge_basis, Matrix};
pub use poly::{discriminant, resultant, sylvester_matrix, Poly};
pub use rational::{parse_rational, rational_to_string};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with cloneable elements.
///
/// The `*_ref` methods let generic code multiply without cloning both
/// operands; every type with by-reference operators gets them for free.
pub trait Ring: Clone + PartialEq + Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self> + Send + Sync {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl<T> Ring for T
where
    T: Clone + PartialEq + Debug + Zero + One + Sub<Output = T> + Neg<Output = T> + Send + Sync,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Rings in which exact division can be attempted: `a.exact_quotient(b)` is
/// `Some(q)` with `q * b == a` when such `q` exists.
pub trait ExactDiv: Ring {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

/// Rings with a canonical square root for perfect squares.
pub trait ExactSqrt: Ring {
    fn sqrt_exact(&self) -> Option<Self>;
}

/// Fields: every nonzero element is invertible.
pub trait Field: ExactDiv {
    fn inv(&self) -> Option<Self> {
        Self::one().exact_quotient(self)
    }
}

/// Rings containing the rationals, so fixed rational matrices (forms,
/// changes of basis) can act on fields with polynomial entries.
pub trait RationalAlgebra: Ring {
    fn from_rational(q: &BigRational) -> Self;
}

impl RationalAlgebra for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl<R: RationalAlgebra> RationalAlgebra for Poly<R> {
    fn from_rational(q: &BigRational) -> Self {
        Poly::constant(R::from_rational(q))
    }
}

/// The image of an integer in `R`.
pub fn from_i64<R: Ring>(n: i64) -> R {
    let mut acc = R::zero();
    let mut base = R::one();
    let mut m = n.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = acc.add_ref(&base);
        }
        base = base.add_ref(&base);
        m >>= 1;
    }
    if n < 0 {
        acc.neg_ref()
    } else {
        acc
    }
}

pub fn pow<R: Ring>(base: &R, exp: u32) -> R {
    let mut acc = R::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul_ref(&b);
        }
        b = b.mul_ref(&b);
        e >>= 1;
    }
    acc
}

impl ExactDiv for BigRational {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Field for BigRational {}

impl ExactSqrt for BigRational {
    fn sqrt_exact(&self) -> Option<Self> {
        let n = self.numer().sqrt_exact()?;
        let d = self.denom().sqrt_exact()?;
        Some(BigRational::new(n, d))
    }
}

impl ExactDiv for BigInt {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl ExactSqrt for BigInt {
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let r = self.sqrt();
        (&r * &r == *self).then_some(r)
    }
}

impl ExactDiv for i64 {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        if *divisor == 0 || self % divisor != 0 {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl ExactDiv for i128 {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        if *divisor == 0 || self % divisor != 0 {
            None
        } else {
            Some(self / divisor)
        }
    }
}
