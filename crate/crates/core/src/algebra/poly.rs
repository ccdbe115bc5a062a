use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{from_i64, pow, ExactDiv, ExactSqrt, Field, Matrix, Ring};
use crate::error::{Error, Result};

/// A univariate polynomial, coefficients stored lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has
/// no coefficients and `degree() == None`. Polynomials over polynomials
/// (`Poly<Poly<R>>`) model the two-variable rings used for spectral curves:
/// the outer indeterminate is the fiber coordinate, the inner one the base
/// coordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// True when only even powers of the indeterminate occur.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// Evaluates at an element of a larger ring `S`, lifting coefficients
    /// through `lift`.
    pub fn eval_with<S: Ring>(&self, x: &S, lift: impl Fn(&R) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.mul_ref(x).add_ref(&lift(c)))
    }

    /// Substitutes another polynomial for the indeterminate.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.eval_with(inner, |c| Poly::constant(c.clone()))
    }

    /// Evaluates at a square matrix (Horner form).
    pub fn eval_matrix(&self, m: &Matrix<R>) -> Result<Matrix<R>> {
        if !m.is_square() {
            return Err(Error::validation("polynomial evaluation needs a square matrix"));
        }
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        Ok(acc)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        pow(self, exp)
    }
}

impl<R: ExactDiv> Poly<R> {
    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every leading coefficient met during long division. Returns `None`
    /// when some step is not exact in `R`.
    fn long_division(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].exact_quotient(&lead)?;
            let shift = top - dd;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = rem[shift + k].sub_ref(&c.mul_ref(dc));
            }
            quot[shift] = c;
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact division: errors if the divisor is zero or does not divide.
    pub fn div_exact_poly(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::validation("division by the zero polynomial"));
        }
        match self.long_division(divisor) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::validation("polynomial division is not exact")),
        }
    }
}

impl<R: Field> Poly<R> {
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::validation("division by the zero polynomial"));
        }
        Ok(self
            .long_division(divisor)
            .expect("leading coefficient of a nonzero divisor is invertible in a field"))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the irreducible factors that occur with multiplicity one.
    pub fn simple_root_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return Poly::one();
        }
        let g = self.gcd(&self.derivative());
        let squarefree = self.div_rem(&g).unwrap().0;
        let repeated = g.gcd(&squarefree);
        squarefree.div_rem(&repeated).unwrap().0.monic()
    }
}

impl<R: ExactSqrt + ExactDiv> Poly<R> {
    /// Square root with a canonical leading coefficient (the one chosen by
    /// `R::sqrt_exact`), or an error when the input is not a perfect square.
    pub fn sqrt_poly(&self) -> Result<Self> {
        let not_square = || Error::validation("polynomial is not a perfect square");
        let Some(deg) = self.degree() else {
            return Ok(Poly::zero());
        };
        if deg % 2 == 1 {
            return Err(not_square());
        }
        let half = deg / 2;
        let lead = self.leading().unwrap().sqrt_exact().ok_or_else(not_square)?;
        let two_lead = lead.add_ref(&lead);
        let mut root = vec![R::zero(); half + 1];
        root[half] = lead;
        // Coefficient of t^(deg-k) in root^2 fixes root[half-k].
        for k in 1..=half {
            let target = deg - k;
            let mut acc = self.coeff(target);
            for i in (half - k + 1)..=half {
                let j = target - i;
                if j > half - k && j <= half {
                    acc = acc.sub_ref(&root[i].mul_ref(&root[j]));
                }
            }
            root[half - k] = acc.exact_quotient(&two_lead).ok_or_else(not_square)?;
        }
        let root = Poly::new(root);
        if &root * &root == *self {
            Ok(root)
        } else {
            Err(not_square())
        }
    }
}

impl<R: ExactDiv> ExactDiv for Poly<R> {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        self.div_exact_poly(divisor).ok()
    }
}

impl<R: ExactSqrt + ExactDiv> ExactSqrt for Poly<R> {
    fn sqrt_exact(&self) -> Option<Self> {
        self.sqrt_poly().ok()
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'a Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'a Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.sub_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.neg_ref(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'a Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        &self + &rhs
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        &self - &rhs
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        &self * &rhs
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let nested = std::any::type_name::<R>().contains("Poly");
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if nested { format!("({c})") } else { c.to_string() };
            match k {
                0 => write!(f, "{coeff}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{coeff}*t")?,
                _ if c.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{coeff}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// The Sylvester matrix of `f` (degree m) and `g` (degree n): n shifted rows
/// of `f` followed by m shifted rows of `g`, highest coefficient first.
pub fn sylvester_matrix<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<Matrix<R>> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::validation("resultant of the zero polynomial"));
    };
    let size = m + n;
    Ok(Matrix::from_fn(size, size, |i, j| {
        let (p, deg, row) = if i < n { (f, m, i) } else { (g, n, i - n) };
        // row `row` holds coefficients of t^deg .. t^0 starting at column `row`
        if j < row || j > row + deg {
            R::zero()
        } else {
            p.coeff(deg - (j - row))
        }
    }))
}

/// Resultant of two nonzero polynomials as the Sylvester determinant.
pub fn resultant<R: ExactDiv>(f: &Poly<R>, g: &Poly<R>) -> Result<R> {
    sylvester_matrix(f, g)?.det()
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)` for `deg f = n >= 1`.
pub fn discriminant<R: ExactDiv>(f: &Poly<R>) -> Result<R> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::validation("discriminant needs degree at least 1")),
    };
    let res = resultant(f, &f.derivative())?;
    let scaled = res
        .exact_quotient(f.leading().unwrap())
        .ok_or_else(|| Error::internal("Res(f, f') not divisible by lc(f)"))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { scaled.neg_ref() } else { scaled })
}
