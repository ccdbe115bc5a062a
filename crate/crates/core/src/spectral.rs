//! Points of the Hitchin bases, the base maps induced by the isogenies, and
//! independent resultant oracles for them.
//!
//! Sections of `K^i` live on one affine chart of the curve, so they are
//! polynomials in `z`; spectral curves are polynomials in `η` with such
//! coefficients ([`CurvePoly`]).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{discriminant, from_i64, pow, resultant, Matrix, Poly, Ring};
use crate::error::{Error, Result};
use crate::lie::{d_iso2, d_iso3, QuadraticForm, Sign};
use crate::{rat, CurvePoly, PolyMatrix, QPoly, Rational};

/// `(a1, a2)`: the curves `η² + a_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSL2Pair {
    pub a1: QPoly,
    pub a2: QPoly,
}

/// `(a2, a3, a4)`: the curve `η⁴ + a2 η² + a3 η + a4 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSL4 {
    pub a2: QPoly,
    pub a3: QPoly,
    pub a4: QPoly,
}

/// The quartic `η⁴ + b1 η² + pf²`, with `pf` the Pfaffian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSO4 {
    pub b1: QPoly,
    pub pf: QPoly,
    pub sign: Sign,
}

/// The sextic `η⁶ + b1 η⁴ + b2 η² - pf²`, with `pf` the Pfaffian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSO6 {
    pub b1: QPoly,
    pub b2: QPoly,
    pub pf: QPoly,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HitchinBasePoint {
    Sl2Pair(BaseSL2Pair),
    Sl4(BaseSL4),
    So4(BaseSO4),
    So6(BaseSO6),
}

/// Polynomial in `η` from coefficients lowest first.
pub fn eta_poly(coeffs: Vec<QPoly>) -> CurvePoly {
    Poly::new(coeffs)
}

impl BaseSL2Pair {
    pub fn new(a1: QPoly, a2: QPoly) -> Self {
        BaseSL2Pair { a1, a2 }
    }

    pub fn curves(&self) -> [CurvePoly; 2] {
        [&self.a1, &self.a2].map(|a| eta_poly(vec![a.clone(), QPoly::zero(), QPoly::one()]))
    }

    /// Companion matrices `[[0, -a_i], [1, 0]]`, with char polys `η² + a_i`.
    pub fn companions(&self) -> (PolyMatrix, PolyMatrix) {
        let companion = |a: &QPoly| {
            Matrix::from_rows(vec![vec![QPoly::zero(), -a], vec![QPoly::one(), QPoly::zero()]]).unwrap()
        };
        (companion(&self.a1), companion(&self.a2))
    }
}

impl BaseSL4 {
    pub fn new(a2: QPoly, a3: QPoly, a4: QPoly) -> Self {
        BaseSL4 { a2, a3, a4 }
    }

    pub fn curve(&self) -> CurvePoly {
        eta_poly(vec![self.a4.clone(), self.a3.clone(), self.a2.clone(), QPoly::zero(), QPoly::one()])
    }

    /// Companion matrix of the curve polynomial; it is traceless.
    pub fn companion(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(4, 4);
        for i in 1..4 {
            m.set(i, i - 1, QPoly::one());
        }
        m.set(0, 3, -&self.a4);
        m.set(1, 3, -&self.a3);
        m.set(2, 3, -&self.a2);
        m
    }
}

impl BaseSO4 {
    pub fn quartic(&self) -> CurvePoly {
        eta_poly(vec![&self.pf * &self.pf, QPoly::zero(), self.b1.clone(), QPoly::zero(), QPoly::one()])
    }
}

impl BaseSO6 {
    pub fn sextic(&self) -> CurvePoly {
        let z = QPoly::zero();
        eta_poly(vec![-(&self.pf * &self.pf), z.clone(), self.b2.clone(), z.clone(), self.b1.clone(), z, QPoly::one()])
    }
}

impl HitchinBasePoint {
    /// The spectral curve polynomial; for a pair of `SL(2)` points, the
    /// product of the two quadrics.
    pub fn curve(&self) -> CurvePoly {
        match self {
            HitchinBasePoint::Sl2Pair(b) => {
                let [c1, c2] = b.curves();
                &c1 * &c2
            }
            HitchinBasePoint::Sl4(b) => b.curve(),
            HitchinBasePoint::So4(b) => b.quartic(),
            HitchinBasePoint::So6(b) => b.sextic(),
        }
    }
}

/// Pfaffian of an orthogonal Higgs field under an orientation: the
/// orientation multiplies `Pf(QX)`.
pub fn oriented_pfaffian(form: &QuadraticForm, x: &PolyMatrix, orientation: Sign) -> Result<QPoly> {
    Ok(orientation.apply(form.lower(x).pfaffian()?))
}

/// The `SO(4)` base sign realised by an orientation:
/// `Pf(Q4 · dI2(Φ1, Φ2)) = a1 - a2`.
pub fn so4_sign(orientation: Sign) -> Sign {
    orientation
}

/// The `SO(6)` base sign realised by an orientation:
/// `Pf(Q6 · dI3(Φ)) = -a3`.
pub fn so6_sign(orientation: Sign) -> Sign {
    orientation.flip()
}

/// `(a1, a2) -> (2(a1 + a2), ±(a1 - a2))`.
pub fn so4_base(b: &BaseSL2Pair, sign: Sign) -> BaseSO4 {
    let two = QPoly::constant(rat(2));
    BaseSO4 { b1: &two * &(&b.a1 + &b.a2), pf: sign.apply(&b.a1 - &b.a2), sign }
}

/// `(a2, a3, a4) -> (2 a2, a2² - 4 a4, ±a3)`.
pub fn so6_base(b: &BaseSL4, sign: Sign) -> BaseSO6 {
    let c = |n: i64| QPoly::constant(rat(n));
    BaseSO6 {
        b1: &c(2) * &b.a2,
        b2: &(&b.a2 * &b.a2) - &(&c(4) * &b.a4),
        pf: sign.apply(b.a3.clone()),
        sign,
    }
}

/// Reads `p(η)` as `p(x)`, or as `p(η - x)` when `reflect` is set, with
/// coefficients in `R[z][η]`.
fn in_x<R: Ring>(p: &Poly<Poly<R>>, reflect: bool) -> Poly<Poly<Poly<R>>> {
    let x = if reflect {
        Poly::new(vec![Poly::var(), -Poly::<Poly<R>>::one()])
    } else {
        Poly::var()
    };
    p.coeffs().iter().rev().fold(Poly::zero(), |acc, c| &(&acc * &x) + &Poly::constant(Poly::constant(c.clone())))
}

/// Least common multiple of all coefficient denominators.
fn common_denominator(polys: &[&QPoly]) -> BigInt {
    polys.iter().flat_map(|p| p.coeffs()).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// `Res_x(x² + a1, (η - x)² + a2)`: the polynomial whose roots are the sums of
/// one root of each quadric.
pub fn so4_oracle(b: &BaseSL2Pair) -> Result<CurvePoly> {
    let [c1, c2] = b.curves();
    resultant(&in_x(&c1, false), &in_x(&c2, true))
}

/// `∏_{a<b} (η - λ_a - λ_b)` over the roots of the `SL(4)` curve, from
/// `Res_x(P(x), P(η - x)) = 16 P(η/2) · (∏_{a<b})²`.
///
/// The resultant is taken over `Z[z][η]` after scaling `P` by the common
/// denominator `d` of its coefficients, which multiplies it by `d⁸`.
pub fn so6_oracle(b: &BaseSL4) -> Result<CurvePoly> {
    let d = common_denominator(&[&b.a2, &b.a3, &b.a4]);
    let int = |p: &QPoly| -> Poly<BigInt> { p.map(|c| (c * Rational::from_integer(d.clone())).to_integer()) };
    let p_int: Poly<Poly<BigInt>> =
        Poly::new(vec![int(&b.a4), int(&b.a3), int(&b.a2), Poly::zero(), Poly::constant(d.clone())]);
    let scaled = resultant(&in_x(&p_int, false), &in_x(&p_int, true))?;
    let d8 = Rational::from_integer(pow(&d, 8));
    let all_pairs: CurvePoly = scaled.map(|c| c.map(|n| Rational::from_integer(n.clone()) / &d8));
    let c = |n: i64| QPoly::constant(rat(n));
    let diagonal = eta_poly(vec![&c(16) * &b.a4, &c(8) * &b.a3, &c(4) * &b.a2, QPoly::zero(), QPoly::one()]);
    let square = all_pairs
        .div_exact_poly(&diagonal)
        .map_err(|_| Error::internal("pair resultant is not divisible by its diagonal factor"))?;
    square.sqrt_poly().map_err(|_| Error::internal("off-diagonal pair resultant is not a square"))
}

/// Discriminant of a spectral curve in `η` and the points over which it
/// is branched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchLocus {
    pub discriminant: QPoly,
    /// Monic product of the factors of multiplicity one: the generic
    /// (simple) branch points.
    pub simple_branch_points: QPoly,
    /// The discriminant vanishes identically.
    pub non_reduced: bool,
}

pub fn branch_locus(base: &HitchinBasePoint) -> Result<BranchLocus> {
    let disc = match base {
        HitchinBasePoint::Sl2Pair(b) => {
            let [c1, c2] = b.curves();
            &discriminant(&c1)? * &discriminant(&c2)?
        }
        other => discriminant(&other.curve())?,
    };
    let non_reduced = disc.is_zero();
    let simple = if non_reduced { QPoly::zero() } else { disc.simple_root_part() };
    Ok(BranchLocus { discriminant: disc, simple_branch_points: simple, non_reduced })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Generic,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityReport {
    pub gcd_a3_a2sq_minus_a4: QPoly,
    pub gcd_a3_a2sq_minus_4a4: QPoly,
    /// Monic polynomial in `z` vanishing wherever the Jacobian can drop rank
    /// on the `u = 0` part of the curve; constant when it never does.
    pub jacobian_locus: QPoly,
    pub jacobian_full_rank: bool,
    pub verdict: Verdict,
}

/// Polynomials in `u` over polynomials in `v` over `Q[z]`.
type Trivariate = Poly<Poly<QPoly>>;

fn term(coeff: &QPoly, u_pow: usize, v_pow: usize) -> Trivariate {
    Poly::monomial(Poly::monomial(coeff.clone(), v_pow), u_pow)
}

fn d_du(f: &Trivariate) -> Trivariate {
    f.derivative()
}

fn d_dv(f: &Trivariate) -> Trivariate {
    f.map(|c| c.derivative())
}

fn d_dz(f: &Trivariate) -> Trivariate {
    f.map(|c| c.map(|d| d.derivative()))
}

/// Smoothness of the `Sym` image of the pair curve along `u = 0`.
///
/// The image is cut out by
/// `F1 = 8u³ - 4uv + 2a2 u + a3` and
/// `F2 = 8u⁴ + 2a2 u² - 8u²v - a2 v + a3 u + v² + a4`.
/// On `u = 0` the curve is `{a3 = 0, G = v² - a2 v + a4 = 0}`. A point
/// where all 2x2 minors of `∂(F1, F2)/∂(z, u, v)` vanish lies over a common
/// zero of `a3` and every `Res_v(G, minor)`, so a constant gcd certifies full
/// rank. The `(u, v)` minor is `-2(2v - a2)²`, which pins `v` to a single
/// value, so a nonconstant gcd is a genuine rank drop.
pub fn genericity_report(b: &BaseSL4) -> Result<GenericityReport> {
    let c = |n: i64| QPoly::constant(rat(n));
    let one = QPoly::one();
    let a2sq = &b.a2 * &b.a2;
    let gcd1 = b.a3.gcd(&(&a2sq - &b.a4));
    let gcd2 = b.a3.gcd(&(&a2sq - &(&c(4) * &b.a4)));

    let f1 = [term(&c(8), 3, 0), term(&c(-4), 1, 1), term(&(&c(2) * &b.a2), 1, 0), term(&b.a3, 0, 0)]
        .into_iter()
        .fold(Trivariate::zero(), |acc, t| &acc + &t);
    let f2 = [
        term(&c(8), 4, 0),
        term(&(&c(2) * &b.a2), 2, 0),
        term(&c(-8), 2, 1),
        term(&-&b.a2, 0, 1),
        term(&b.a3, 1, 0),
        term(&one, 0, 2),
        term(&b.a4, 0, 0),
    ]
    .into_iter()
    .fold(Trivariate::zero(), |acc, t| &acc + &t);

    let at_u0 = |f: &Trivariate| f.coeff(0);
    let row1 = [d_dz(&f1), d_du(&f1), d_dv(&f1)].map(|f| at_u0(&f));
    let row2 = [d_dz(&f2), d_du(&f2), d_dv(&f2)].map(|f| at_u0(&f));
    let g = at_u0(&f2);

    if b.a3.is_zero() {
        return Ok(GenericityReport {
            gcd_a3_a2sq_minus_a4: gcd1,
            gcd_a3_a2sq_minus_4a4: gcd2,
            jacobian_locus: QPoly::zero(),
            jacobian_full_rank: false,
            verdict: Verdict::Degenerate,
        });
    }

    let mut locus = b.a3.monic();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let minor = &(&row1[i] * &row2[j]) - &(&row1[j] * &row2[i]);
        let res = if minor.is_zero() { QPoly::zero() } else { resultant(&g, &minor)? };
        locus = locus.gcd(&res);
    }
    let full_rank = locus.degree() == Some(0);
    Ok(GenericityReport {
        gcd_a3_a2sq_minus_a4: gcd1,
        gcd_a3_a2sq_minus_4a4: gcd2,
        jacobian_locus: locus,
        jacobian_full_rank: full_rank,
        verdict: if full_rank { Verdict::Generic } else { Verdict::Degenerate },
    })
}

/// `char_poly(dI2(C(a1), C(a2)))` for the companion matrices: the Lie-side
/// quartic.
pub fn lie_quartic(b: &BaseSL2Pair) -> Result<CurvePoly> {
    let (m1, m2) = b.companions();
    d_iso2(&m1, &m2)?.char_poly()
}

/// `char_poly(dI3(C(P)))` for the companion matrix of the curve: the
/// Lie-side sextic.
pub fn lie_sextic(b: &BaseSL4) -> Result<CurvePoly> {
    d_iso3(&b.companion())?.char_poly()
}

/// `η ↦ -η` invariance.
pub fn is_even_in_eta(p: &CurvePoly) -> bool {
    p.coeffs().iter().enumerate().all(|(k, c)| k % 2 == 0 || c.is_zero())
}

/// Small helper for tests and examples: `Σ c_k z^k` from integers.
pub fn zpoly(coeffs: &[i64]) -> QPoly {
    Poly::new(coeffs.iter().map(|&c| from_i64(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eta(coeffs: &[i64]) -> CurvePoly {
        eta_poly(coeffs.iter().map(|&c| QPoly::constant(rat(c))).collect())
    }

    fn sl4(a2: &[i64], a3: &[i64], a4: &[i64]) -> BaseSL4 {
        BaseSL4::new(zpoly(a2), zpoly(a3), zpoly(a4))
    }

    #[test]
    fn so4_examples() {
        let b = BaseSL2Pair::new(zpoly(&[0, 1]), QPoly::zero());
        let base = so4_base(&b, Sign::Minus);
        assert_eq!(base.b1, zpoly(&[0, 2]));
        assert_eq!(base.pf, zpoly(&[0, -1]));
        let b = BaseSL2Pair::new(zpoly(&[-1]), zpoly(&[-4]));
        assert_eq!(so4_base(&b, Sign::Plus).quartic(), eta(&[9, 0, -10, 0, 1]));
        assert_eq!(so4_oracle(&b).unwrap(), eta(&[9, 0, -10, 0, 1]));
        let same = BaseSL2Pair::new(zpoly(&[3, 1]), zpoly(&[3, 1]));
        assert!(so4_base(&same, Sign::Plus).pf.is_zero());
        let zero = BaseSL2Pair::new(QPoly::zero(), QPoly::zero());
        assert_eq!(so4_oracle(&zero).unwrap(), eta(&[0, 0, 0, 0, 1]));
        let opp = BaseSL2Pair::new(zpoly(&[0, 1]), zpoly(&[0, -1]));
        let expected = eta_poly(vec![zpoly(&[0, 0, 4]), QPoly::zero(), QPoly::zero(), QPoly::zero(), QPoly::one()]);
        assert_eq!(so4_oracle(&opp).unwrap(), expected);
    }

    #[test]
    fn so6_examples() {
        let b = sl4(&[-5], &[], &[4]);
        let base = so6_base(&b, Sign::Plus);
        assert_eq!((base.b1.clone(), base.b2.clone(), base.pf.clone()), (zpoly(&[-10]), zpoly(&[9]), QPoly::zero()));
        assert_eq!(base.sextic(), eta(&[0, 0, 9, 0, -10, 0, 1]));
        assert_eq!(so6_oracle(&b).unwrap(), base.sextic());
        let b = sl4(&[], &[1], &[]);
        assert_eq!(so6_base(&b, Sign::Plus).sextic(), eta(&[-1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(so6_oracle(&b).unwrap(), eta(&[-1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(so6_oracle(&sl4(&[], &[], &[])).unwrap(), eta(&[0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn so6_oracle_with_polynomial_coefficients() {
        let b = sl4(&[1, -2, 3], &[0, 1, 0, -1], &[2, 0, 5]);
        let base = so6_base(&b, Sign::Minus);
        assert_eq!(so6_oracle(&b).unwrap(), base.sextic());
        assert!(is_even_in_eta(&base.sextic()));
        assert_eq!(lie_sextic(&b).unwrap(), base.sextic());
    }

    #[test]
    fn pfaffian_signs_follow_the_orientation() {
        let b = sl4(&[1, 2], &[3, -1], &[0, 0, 1]);
        let x = d_iso3(&b.companion()).unwrap();
        for o in [Sign::Plus, Sign::Minus] {
            let pf = oriented_pfaffian(&QuadraticForm::q6(), &x, o).unwrap();
            assert_eq!(pf, so6_base(&b, so6_sign(o)).pf);
        }
        let p = BaseSL2Pair::new(zpoly(&[1, 1]), zpoly(&[0, 0, 2]));
        let (m1, m2) = p.companions();
        let y = d_iso2(&m1, &m2).unwrap();
        for o in [Sign::Plus, Sign::Minus] {
            let pf = oriented_pfaffian(&QuadraticForm::q4(), &y, o).unwrap();
            assert_eq!(pf, so4_base(&p, so4_sign(o)).pf);
        }
    }

    #[test]
    fn branch_loci() {
        let b = BaseSL2Pair::new(zpoly(&[-1, 0, 1]), zpoly(&[1]));
        let locus = branch_locus(&HitchinBasePoint::Sl2Pair(b)).unwrap();
        assert_eq!(locus.simple_branch_points, zpoly(&[-1, 0, 1]));
        let b = BaseSL2Pair::new(zpoly(&[0, 1]), zpoly(&[-1, 1]));
        let locus = branch_locus(&HitchinBasePoint::Sl2Pair(b)).unwrap();
        assert_eq!(locus.simple_branch_points, zpoly(&[0, -1, 1]));
        let locus = branch_locus(&HitchinBasePoint::Sl4(sl4(&[], &[], &[]))).unwrap();
        assert!(locus.non_reduced);
    }

    #[test]
    fn genericity() {
        let r = genericity_report(&sl4(&[], &[1], &[])).unwrap();
        assert_eq!(r.verdict, Verdict::Generic);
        assert_eq!(r.gcd_a3_a2sq_minus_a4.degree(), Some(0));
        let r = genericity_report(&sl4(&[0, 1], &[], &[1])).unwrap();
        assert_eq!(r.verdict, Verdict::Degenerate);
        let r = genericity_report(&sl4(&[0, 1], &[0, 1], &[])).unwrap();
        assert_eq!(r.gcd_a3_a2sq_minus_a4, zpoly(&[0, 1]));
        assert_eq!(r.verdict, Verdict::Degenerate);
        // a2² - a4 vanishes identically but a2² - 4a4 = -3 does not: the
        // Jacobian sides with the factor 4.
        let r = genericity_report(&sl4(&[1], &[0, 1], &[1])).unwrap();
        assert_eq!(r.gcd_a3_a2sq_minus_a4, zpoly(&[0, 1]));
        assert_eq!(r.gcd_a3_a2sq_minus_4a4.degree(), Some(0));
        assert_eq!(r.verdict, Verdict::Generic);
        let r = genericity_report(&sl4(&[4], &[0, 1], &[4, 0, 1])).unwrap();
        assert_eq!(r.jacobian_locus, zpoly(&[0, 1]));
        assert_eq!(r.verdict, Verdict::Degenerate);
    }
}
