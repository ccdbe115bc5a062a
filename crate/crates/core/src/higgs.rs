use crate::algebra::{Matrix, Poly, RationalAlgebra};
use crate::error::{Error, Result};
use crate::{QMatrix, QPoly};

/// A Higgs field `Φ = [[0, α], [-αᵀ, 0]]` on `V1 ⊕ V2`, where `αᵀ` is the
/// transpose for the forms `q1` on `V1` and `q2` on `V2`:
/// `αᵀ = q2⁻¹ α* q1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HiggsBlockField<R = QPoly> {
    phi: Matrix<R>,
    split: usize,
    q1: QMatrix,
    q2: QMatrix,
    degrees: Vec<i64>,
}

impl<R: RationalAlgebra> HiggsBlockField<R> {
    /// Validates the shapes, the vanishing diagonal blocks and
    /// `Φ21 = -q2⁻¹ Φ12ᵀ q1`.
    pub fn new(phi: Matrix<R>, split: usize, q1: QMatrix, q2: QMatrix) -> Result<Self> {
        let n = phi.rows();
        if !phi.is_square() || split == 0 || split >= n {
            return Err(Error::validation("Higgs field must be square with two nonempty blocks"));
        }
        if q1.rows() != split || !q1.is_square() || q2.rows() != n - split || !q2.is_square() {
            return Err(Error::validation("block forms do not match the block sizes"));
        }
        let field = HiggsBlockField { phi, split, q1, q2, degrees: Vec::new() };
        if !field.upper_left().is_zero() || !field.lower_right().is_zero() {
            return Err(Error::validation("diagonal blocks of the Higgs field are not zero"));
        }
        if field.lower_left() != -&field.orthogonal_transpose()? {
            return Err(Error::validation("off-diagonal blocks are not anti-symmetric for (q1, q2)"));
        }
        Ok(field)
    }

    /// Attaches integer labels (degrees of the block bundles).
    pub fn with_degrees(mut self, degrees: Vec<i64>) -> Self {
        self.degrees = degrees;
        self
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn phi(&self) -> &Matrix<R> {
        &self.phi
    }

    pub fn q1(&self) -> &QMatrix {
        &self.q1
    }

    pub fn q2(&self) -> &QMatrix {
        &self.q2
    }

    fn other(&self) -> usize {
        self.phi.rows() - self.split
    }

    pub fn upper_left(&self) -> Matrix<R> {
        self.phi.block(0, 0, self.split, self.split)
    }

    /// `α = Φ12 : V2 -> V1`.
    pub fn upper_right(&self) -> Matrix<R> {
        self.phi.block(0, self.split, self.split, self.other())
    }

    pub fn lower_left(&self) -> Matrix<R> {
        self.phi.block(self.split, 0, self.other(), self.split)
    }

    pub fn lower_right(&self) -> Matrix<R> {
        self.phi.block(self.split, self.split, self.other(), self.other())
    }

    /// `q2⁻¹ αᵗ q1`.
    pub fn orthogonal_transpose(&self) -> Result<Matrix<R>> {
        let q2_inv = self.q2.inverse()?.map(R::from_rational);
        Ok(&(&q2_inv * &self.upper_right().transpose()) * &self.q1.map(R::from_rational))
    }

    pub fn char_poly(&self) -> Result<Poly<R>> {
        self.phi.char_poly()
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn rejects_broken_block_symmetry() {
        let j = QMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap();
        let mut phi = QMatrix::zeros(4, 4);
        phi.set(0, 2, rat(1));
        assert!(HiggsBlockField::new(phi.clone(), 2, j.clone(), -&j).is_err());
        // Φ21 = -q2⁻¹ Φ12ᵀ q1 = J Φ12ᵀ J puts the 1 at (3, 1).
        phi.set(3, 1, rat(1));
        let field = HiggsBlockField::new(phi, 2, j.clone(), -&j).unwrap();
        assert_eq!(field.char_poly().unwrap(), Poly::monomial(rat(1), 4));
        assert!(HiggsBlockField::new(QMatrix::identity(4), 2, j.clone(), -&j).is_err());
    }
}
