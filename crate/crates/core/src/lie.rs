//! The isogenies `SL(2) x SL(2) -> SO(4)` and `SL(4) -> SO(6)` at group and
//! Lie-algebra level, the invariant forms `Q4`, `Q6`, the `α` block of the
//! split real form, and the Hodge star on `Λ²` of a rank-4 orthogonal space.

use num_traits::Zero;

use crate::algebra::{from_i64, ExactDiv, Matrix, RationalAlgebra, Ring};
use crate::error::{Error, Result};
use crate::higgs::HiggsBlockField;
use crate::{rat, QMatrix, Rational};

/// A choice of ±1, used for orientations and for the sign of a Pfaffian.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(value: i64) -> Result<Self> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::validation(format!("sign must be +1 or -1, got {value}"))),
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply<R: Ring>(self, x: R) -> R {
        match self {
            Sign::Plus => x,
            Sign::Minus => x.neg_ref(),
        }
    }
}

/// A nondegenerate symmetric bilinear form with a chosen orientation.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    gram: QMatrix,
    orientation: Sign,
}

impl QuadraticForm {
    pub fn new(gram: QMatrix, orientation: Sign) -> Result<Self> {
        if !gram.is_square() || !gram.is_symmetric() {
            return Err(Error::validation("Gram matrix must be square and symmetric"));
        }
        if gram.det()?.is_zero() {
            return Err(Error::validation("Gram matrix is degenerate"));
        }
        Ok(QuadraticForm { gram, orientation })
    }

    /// `ω ⊗ ω` with `ω = [[0, 1], [-1, 0]]`.
    pub fn q4() -> Self {
        let omega = symplectic_unit();
        QuadraticForm { gram: omega.kronecker(&omega), orientation: Sign::Plus }
    }

    /// The wedge pairing `Λ² x Λ² -> Λ⁴` against `e1^e2^e3^e4`.
    pub fn q6() -> Self {
        let signs = [1, -1, 1, 1, -1, 1];
        let gram = Matrix::from_fn(6, 6, |i, j| if i + j == 5 { rat(signs[i]) } else { Rational::zero() });
        QuadraticForm { gram, orientation: Sign::Plus }
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn orientation(&self) -> Sign {
        self.orientation
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn with_orientation(&self, orientation: Sign) -> Self {
        QuadraticForm { gram: self.gram.clone(), orientation }
    }

    fn lifted<R: RationalAlgebra>(&self) -> Matrix<R> {
        self.gram.map(R::from_rational)
    }

    /// `XᵀQX = Q`.
    pub fn preserves<R: RationalAlgebra>(&self, x: &Matrix<R>) -> bool {
        let g = self.lifted::<R>();
        x.rows() == self.dim() && x.cols() == self.dim() && &(&x.transpose() * &g) * x == g
    }

    /// `XᵀQ + QX = 0`.
    pub fn is_skew<R: RationalAlgebra>(&self, x: &Matrix<R>) -> bool {
        let g = self.lifted::<R>();
        x.rows() == self.dim() && x.cols() == self.dim() && (&(&x.transpose() * &g) + &(&g * x)).is_zero()
    }

    /// `QX`, which is antisymmetric exactly when `X` is skew for `Q`.
    pub fn lower<R: RationalAlgebra>(&self, x: &Matrix<R>) -> Matrix<R> {
        &self.lifted::<R>() * x
    }

    /// Gram matrix of the form on the span of `basis`.
    pub fn restrict(&self, basis: &[Vec<Rational>]) -> QMatrix {
        Matrix::from_fn(basis.len(), basis.len(), |i, j| {
            let gv = self.gram.mul_vec(&basis[j]);
            dot(&basis[i], &gv)
        })
    }
}

fn dot<R: Ring>(u: &[R], v: &[R]) -> R {
    u.iter().zip(v).fold(R::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
}

fn symplectic_unit() -> QMatrix {
    Matrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 1) => rat(1),
        (1, 0) => rat(-1),
        _ => Rational::zero(),
    })
}

/// Which algebra a [`LieElement`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    Sl2Pair,
    Sl4,
    So4,
    So6,
}

/// A validated element of `sl2 x sl2`, `sl4`, `so4` or `so6`.
#[derive(Clone, Debug, PartialEq)]
pub enum LieElement<R> {
    Sl2Pair(Matrix<R>, Matrix<R>),
    Sl4(Matrix<R>),
    So4(Matrix<R>),
    So6(Matrix<R>),
}

impl<R: RationalAlgebra> LieElement<R> {
    pub fn sl2_pair(a1: Matrix<R>, a2: Matrix<R>) -> Result<Self> {
        check_traceless(&a1, 2, "first sl2 factor")?;
        check_traceless(&a2, 2, "second sl2 factor")?;
        Ok(LieElement::Sl2Pair(a1, a2))
    }

    pub fn sl4(a: Matrix<R>) -> Result<Self> {
        check_traceless(&a, 4, "sl4 element")?;
        Ok(LieElement::Sl4(a))
    }

    /// An element of `so4` or `so6`, chosen by size, skew for `Q4` or `Q6`.
    pub fn orthogonal(x: Matrix<R>) -> Result<Self> {
        let (form, wrap): (QuadraticForm, fn(Matrix<R>) -> Self) = match (x.rows(), x.cols()) {
            (4, 4) => (QuadraticForm::q4(), LieElement::So4),
            (6, 6) => (QuadraticForm::q6(), LieElement::So6),
            (r, c) => return Err(Error::validation(format!("orthogonal element must be 4x4 or 6x6, got {r}x{c}"))),
        };
        if !form.is_skew(&x) {
            return Err(Error::validation("matrix is not skew for the invariant form"));
        }
        Ok(wrap(x))
    }

    pub fn tag(&self) -> AlgebraTag {
        match self {
            LieElement::Sl2Pair(..) => AlgebraTag::Sl2Pair,
            LieElement::Sl4(_) => AlgebraTag::Sl4,
            LieElement::So4(_) => AlgebraTag::So4,
            LieElement::So6(_) => AlgebraTag::So6,
        }
    }

    /// The image under the derivative of the isogeny.
    pub fn image(&self) -> Result<Self> {
        match self {
            LieElement::Sl2Pair(a1, a2) => Ok(LieElement::So4(d_iso2(a1, a2)?)),
            LieElement::Sl4(a) => Ok(LieElement::So6(d_iso3(a)?)),
            _ => Err(Error::validation("orthogonal elements are already in the target algebra")),
        }
    }
}

fn check_square<R: Ring>(m: &Matrix<R>, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::validation(format!("{what} must be {n}x{n}, got {}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

fn check_traceless<R: Ring>(m: &Matrix<R>, n: usize, what: &str) -> Result<()> {
    check_square(m, n, what)?;
    if !m.trace().is_zero() {
        return Err(Error::validation(format!("{what} must be traceless")));
    }
    Ok(())
}

fn check_unimodular<R: ExactDiv>(m: &Matrix<R>, n: usize, what: &str) -> Result<()> {
    check_square(m, n, what)?;
    if !m.det()?.is_one() {
        return Err(Error::validation(format!("{what} must have determinant 1")));
    }
    Ok(())
}

/// `(A1, A2) -> A1 ⊗ A2`.
pub fn iso2_group<R: ExactDiv>(a1: &Matrix<R>, a2: &Matrix<R>) -> Result<Matrix<R>> {
    check_unimodular(a1, 2, "first factor")?;
    check_unimodular(a2, 2, "second factor")?;
    Ok(a1.kronecker(a2))
}

/// `A -> Λ²A`.
pub fn iso3_group<R: ExactDiv>(a: &Matrix<R>) -> Result<Matrix<R>> {
    check_unimodular(a, 4, "matrix")?;
    a.exterior_square()
}

/// `(Ȧ1, Ȧ2) -> Ȧ1 ⊗ I + I ⊗ Ȧ2`.
pub fn d_iso2<R: Ring>(a1: &Matrix<R>, a2: &Matrix<R>) -> Result<Matrix<R>> {
    check_traceless(a1, 2, "first factor")?;
    check_traceless(a2, 2, "second factor")?;
    let id = Matrix::identity(2);
    Ok(&a1.kronecker(&id) + &id.kronecker(a2))
}

/// `Ȧ -> Ȧ ⊗ I + I ⊗ Ȧ` restricted to `Λ²`.
pub fn d_iso3<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    check_traceless(a, 4, "matrix")?;
    a.wedge_derivation()
}

/// The 3x3 block `α` of `d_iso3(ȧ)` for symmetric traceless `ȧ`, read off in
/// the basis of [`split_basis`].
pub fn alpha_block<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    check_traceless(a, 4, "matrix")?;
    if !a.is_symmetric() {
        return Err(Error::validation("matrix must be symmetric"));
    }
    let e = |i: usize, j: usize| a.get(i - 1, j - 1).clone();
    let rows = vec![
        vec![e(1, 3) + e(2, 4), e(2, 3) - e(1, 4), e(1, 1) + e(2, 2)],
        vec![e(3, 4) - e(1, 2), e(1, 1) + e(3, 3), e(1, 4) + e(2, 3)],
        vec![-(e(2, 2) + e(3, 3)), e(1, 2) + e(3, 4), e(2, 4) - e(1, 3)],
    ];
    Matrix::from_rows(rows)
}

/// Columns `e12+e34, e13-e24, e14+e23` then `e14-e23, e13+e24, e12-e34`.
/// `Q6` is `2I` on the first three and `-2I` on the last three.
pub fn split_basis() -> QMatrix {
    let cols: [[i64; 6]; 6] = [
        [1, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 0, 1, -1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, -1],
    ];
    Matrix::from_fn(6, 6, |i, j| rat(cols[j][i]))
}

/// `P⁻¹ X P` with `P` from [`split_basis`].
pub fn split_conjugate<R: RationalAlgebra>(x: &Matrix<R>) -> Result<Matrix<R>> {
    check_square(x, 6, "matrix")?;
    let p = split_basis();
    let p_inv = p.inverse()?;
    Ok(&(&p_inv.map(R::from_rational) * x) * &p.map(R::from_rational))
}

/// `Λ²E = Λ²₊E ⊕ Λ²₋E` for a rank-4 orthogonal space.
#[derive(Clone, Debug, PartialEq)]
pub struct HodgeSplit {
    pub star: QMatrix,
    pub plus_basis: Vec<Vec<Rational>>,
    pub minus_basis: Vec<Vec<Rational>>,
    pub q_plus: QuadraticForm,
    pub q_minus: QuadraticForm,
    pub orientation: Sign,
}

impl HodgeSplit {
    /// Columns: the plus basis, then the minus basis.
    pub fn change_of_basis(&self) -> QMatrix {
        let cols: Vec<Vec<Rational>> = self.plus_basis.iter().chain(&self.minus_basis).cloned().collect();
        Matrix::from_columns(&cols).expect("six vectors of length six")
    }
}

/// The Hodge star `* = (Λ²q)⁻¹ · Q` where `Q` is the wedge pairing scaled by
/// the orientation and by `√det q`, so that `*² = I`. `det q` must be a
/// rational square.
pub fn hodge_split(q: &QuadraticForm, orientation: Sign) -> Result<HodgeSplit> {
    if q.dim() != 4 {
        return Err(Error::validation(format!("Hodge split needs a rank-4 form, got rank {}", q.dim())));
    }
    let det = q.gram().det()?;
    let root = crate::algebra::ExactSqrt::sqrt_exact(&det)
        .ok_or_else(|| Error::validation(format!("det q = {det} is not a rational square")))?;
    let volume = QuadraticForm::q6().gram().scale(&root);
    let lambda2 = q.gram().compound2()?;
    let star_plus = &lambda2.inverse()? * &volume;
    let id = QMatrix::identity(6);
    if &star_plus * &star_plus != id {
        return Err(Error::internal("Hodge star does not square to the identity"));
    }
    let plus = independent_columns(&(&id + &star_plus), &[0, 1, 2, 3, 4, 5])?;
    let minus = independent_columns(&(&id - &star_plus), &[2, 1, 0, 3, 4, 5])?;
    let form = QuadraticForm { gram: volume, orientation: Sign::Plus };
    let (q_plus, q_minus) = (form.restrict(&plus), form.restrict(&minus));
    let wrap = |g: QMatrix| QuadraticForm::new(g, orientation);
    Ok(match orientation {
        Sign::Plus => HodgeSplit {
            star: star_plus,
            plus_basis: plus,
            minus_basis: minus,
            q_plus: wrap(q_plus)?,
            q_minus: wrap(q_minus)?,
            orientation,
        },
        Sign::Minus => HodgeSplit {
            star: -&star_plus,
            plus_basis: minus,
            minus_basis: plus,
            q_plus: wrap(-&q_minus)?,
            q_minus: wrap(-&q_plus)?,
            orientation,
        },
    })
}

fn independent_columns(m: &QMatrix, order: &[usize]) -> Result<Vec<Vec<Rational>>> {
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for &k in order {
        let col = m.column(k);
        let mut trial = chosen.clone();
        trial.push(col.clone());
        if Matrix::from_columns(&trial)?.rank() == trial.len() {
            chosen = trial;
        }
        if chosen.len() == 3 {
            return Ok(chosen);
        }
    }
    Err(Error::internal("eigenspace of the Hodge star is not three-dimensional"))
}

/// The `SO(3,3)` Higgs field `[[0, α], [αᵗ, 0]]` obtained by conjugating
/// `d_iso3(ȧ)` into the split basis.
pub fn build_block_higgs_so33<R: RationalAlgebra>(a: &Matrix<R>) -> Result<HiggsBlockField<R>> {
    alpha_block(a)?;
    let conj = split_conjugate(&d_iso3(a)?)?;
    let q1 = QMatrix::identity(3).scale(&from_i64(2));
    let q2 = QMatrix::identity(3).scale(&from_i64(-2));
    HiggsBlockField::new(conj, 3, q1, q2).map_err(|e| Error::internal(format!("SO(3,3) block structure: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, QPoly};

    fn q(rows: &[&[i64]]) -> QMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
    }

    fn diag(xs: &[Rational]) -> QMatrix {
        Matrix::diagonal(xs)
    }

    fn wedge_index(i: usize, j: usize) -> usize {
        crate::algebra::wedge_basis(4).iter().position(|&p| p == (i, j)).unwrap()
    }

    #[test]
    fn standard_forms() {
        let g4 = QuadraticForm::q4();
        let anti = |signs: &[i64]| {
            let n = signs.len();
            Matrix::from_fn(n, n, |i, j| if i + j == n - 1 { rat(signs[i]) } else { Rational::zero() })
        };
        assert_eq!(g4.gram(), &anti(&[1, -1, -1, 1]));
        assert_eq!(QuadraticForm::q6().gram(), &anti(&[1, -1, 1, 1, -1, 1]));
        assert_eq!(QuadraticForm::q6().gram().det().unwrap(), rat(-1));
    }

    #[test]
    fn q6_is_the_wedge_pairing() {
        // e_I ^ e_J = sign * e1^e2^e3^e4, computed from permutation parity.
        let basis = crate::algebra::wedge_basis(4);
        for (r, &(i, j)) in basis.iter().enumerate() {
            for (c, &(k, l)) in basis.iter().enumerate() {
                let perm = [i, j, k, l];
                let mut distinct = perm.to_vec();
                distinct.sort();
                distinct.dedup();
                let expected = if distinct.len() < 4 {
                    0
                } else {
                    let inversions = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
                    if inversions % 2 == 0 { 1 } else { -1 }
                };
                assert_eq!(QuadraticForm::q6().gram().get(r, c), &rat(expected));
            }
        }
    }

    #[test]
    fn group_maps_and_kernels() {
        let i2 = QMatrix::identity(2);
        assert_eq!(iso2_group(&i2, &i2).unwrap(), QMatrix::identity(4));
        assert_eq!(iso2_group(&-&i2, &-&i2).unwrap(), QMatrix::identity(4));
        let a = diag(&[rat(2), frac(1, 2)]);
        let x = iso2_group(&a, &i2).unwrap();
        assert_eq!(x, diag(&[rat(2), rat(2), frac(1, 2), frac(1, 2)]));
        assert!(QuadraticForm::q4().preserves(&x));
        assert_eq!(iso3_group(&-&QMatrix::identity(4)).unwrap(), QMatrix::identity(6));
        let y = iso3_group(&diag(&[rat(1), rat(-1), rat(2), frac(-1, 2)])).unwrap();
        assert_eq!(y, diag(&[rat(-1), rat(2), frac(-1, 2), rat(-2), frac(1, 2), rat(-1)]));
        assert!(QuadraticForm::q6().preserves(&y));
        assert!(iso2_group(&a, &a.scale(&rat(2))).unwrap_err().is_validation());
        assert!(iso3_group(&QMatrix::identity(4).scale(&rat(2))).is_err());
    }

    #[test]
    fn lie_maps() {
        let x = d_iso2(&diag(&[rat(1), rat(-1)]), &diag(&[rat(2), rat(-2)])).unwrap();
        assert_eq!(x, diag(&[rat(3), rat(-1), rat(1), rat(-3)]));
        assert!(QuadraticForm::q4().is_skew(&x));
        let y = d_iso3(&diag(&[rat(1), rat(-1), rat(2), rat(-2)])).unwrap();
        assert_eq!(y, diag(&[rat(0), rat(3), rat(-1), rat(1), rat(-3), rat(0)]));
        assert!(d_iso3(&QMatrix::zeros(4, 4)).unwrap().is_zero());
        assert!(d_iso3(&QMatrix::identity(4)).unwrap_err().is_validation());
        assert!(d_iso2(&QMatrix::identity(2), &QMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn derivation_is_the_derivative_of_the_group_map() {
        // Λ²(I + tA) = I + t dΛ²(A) + t² (...), checked through the linear term.
        let a = q(&[&[1, 2, 0, -1], &[3, 0, 1, 1], &[0, -2, -4, 5], &[1, 1, 1, 3]]);
        let t = frac(1, 1000);
        let lhs = (&QMatrix::identity(4) + &a.scale(&t)).compound2().unwrap();
        let quad = &(&lhs - &QMatrix::identity(6)) - &d_iso3(&a).unwrap().scale(&t);
        let second = a.compound2().unwrap();
        // The quadratic part is t² Λ²A exactly.
        assert_eq!(quad, second.scale(&(&t * &t)));
    }

    #[test]
    fn alpha_examples() {
        let a = diag(&[rat(1), rat(1), rat(-1), rat(-1)]);
        assert_eq!(alpha_block(&a).unwrap(), q(&[&[0, 0, 2], &[0, 0, 0], &[0, 0, 0]]));
        assert!(alpha_block(&QMatrix::zeros(4, 4)).unwrap().is_zero());
        let asym = q(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert!(alpha_block(&asym).unwrap_err().is_validation());
    }

    #[test]
    fn split_basis_block_form() {
        let a = q(&[&[1, 2, -1, 3], &[2, -4, 0, 1], &[-1, 0, 5, 2], &[3, 1, 2, -2]]);
        let conj = split_conjugate(&d_iso3(&a).unwrap()).unwrap();
        let alpha = alpha_block(&a).unwrap();
        assert_eq!(conj.block(0, 3, 3, 3), alpha);
        assert_eq!(conj.block(3, 0, 3, 3), alpha.transpose());
        assert!(conj.block(0, 0, 3, 3).is_zero());
        assert!(conj.block(3, 3, 3, 3).is_zero());
        let p = split_basis();
        let gram = &(&p.transpose() * QuadraticForm::q6().gram()) * &p;
        let two = rat(2);
        assert_eq!(gram, diag(&[two.clone(), two.clone(), two.clone(), -&two, -&two, -&two]));
    }

    #[test]
    fn hodge_star_of_identity() {
        let split = hodge_split(&QuadraticForm::new(QMatrix::identity(4), Sign::Plus).unwrap(), Sign::Plus).unwrap();
        let e = |i, j| {
            let mut v = vec![Rational::zero(); 6];
            v[wedge_index(i, j)] = rat(1);
            v
        };
        assert_eq!(split.star.mul_vec(&e(0, 1)), e(2, 3));
        let sum = |a: Vec<Rational>, b: Vec<Rational>, s: i64| -> Vec<Rational> {
            a.iter().zip(&b).map(|(x, y)| x + y * rat(s)).collect()
        };
        assert_eq!(
            split.plus_basis,
            vec![sum(e(0, 1), e(2, 3), 1), sum(e(0, 2), e(1, 3), -1), sum(e(0, 3), e(1, 2), 1)]
        );
        assert_eq!(split.change_of_basis(), split_basis());
        let flipped = hodge_split(&QuadraticForm::new(QMatrix::identity(4), Sign::Plus).unwrap(), Sign::Minus).unwrap();
        assert_eq!(flipped.plus_basis, split.minus_basis);
        assert_eq!(flipped.minus_basis, split.plus_basis);
        assert_eq!(flipped.star, -&split.star);
        assert_eq!(flipped.q_plus.gram(), split.q_plus.gram());
    }

    #[test]
    fn hodge_star_of_split_signature_form() {
        let g = q(&[&[2, 1, 0, 0], &[1, -3, 0, 0], &[0, 0, 0, 7], &[0, 0, 7, 0]]);
        // det = 343 is not a rational square.
        assert!(hodge_split(&QuadraticForm::new(g, Sign::Plus).unwrap(), Sign::Plus).unwrap_err().is_validation());
        let g = q(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 0, 2], &[0, 0, 2, 0]]);
        let split = hodge_split(&QuadraticForm::new(g, Sign::Plus).unwrap(), Sign::Plus).unwrap();
        assert_eq!(&split.star * &split.star, QMatrix::identity(6));
        assert_eq!(split.q_plus.gram().rank(), 3);
        assert_eq!(split.q_minus.gram().rank(), 3);
        assert_eq!(split.change_of_basis().rank(), 6);
    }

    #[test]
    fn so33_block_field() {
        let z = QPoly::var();
        let c = |n: i64| QPoly::constant(rat(n));
        let a = Matrix::from_rows(vec![
            vec![z.clone(), c(1), c(0), z.clone()],
            vec![c(1), c(2), &z * &z, c(0)],
            vec![c(0), &z * &z, -&z, c(3)],
            vec![z.clone(), c(0), c(3), c(-2)],
        ])
        .unwrap();
        let field = build_block_higgs_so33(&a).unwrap();
        assert_eq!(field.upper_right(), alpha_block(&a).unwrap());
        assert_eq!(field.char_poly().unwrap(), d_iso3(&a).unwrap().char_poly().unwrap());
        let zero = build_block_higgs_so33(&Matrix::<QPoly>::zeros(4, 4)).unwrap();
        assert!(zero.phi().is_zero());
    }

    #[test]
    fn lie_elements() {
        let a = diag(&[rat(1), rat(-1)]);
        let e = LieElement::sl2_pair(a.clone(), a.clone()).unwrap();
        assert_eq!(e.image().unwrap().tag(), AlgebraTag::So4);
        assert!(LieElement::orthogonal(QMatrix::identity(4)).is_err());
        assert!(LieElement::sl4(QMatrix::identity(4)).is_err());
    }
}
