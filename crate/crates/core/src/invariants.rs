//! Topological invariants of the split real forms: Toledo degrees and their
//! Milnor–Wood bounds, Stiefel–Whitney labels, counts over the 2-torsion of
//! the Jacobian, and the block Higgs field of an `SO0(2,2)` bundle built from
//! a pair of `SL(2,R)` bundles.
//!
//! The 2-torsion `Jac[2]` is the group `(Z/2)^(2g)`. Where an equation needs
//! square roots it is solved inside `(Z/4)^(2g)`, whose elements of order two
//! are exactly `2 · (Z/2)^(2g)`.

use num_traits::Zero;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::higgs::HiggsBlockField;
use crate::lie::{d_iso2, QuadraticForm, Sign};
use crate::spectral::{so4_base, so4_sign, BaseSL2Pair, BaseSO4};
use crate::{PolyMatrix, QMatrix, QPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ToledoPair {
    pub first: i64,
    pub second: i64,
}

impl ToledoPair {
    pub fn new(first: i64, second: i64) -> Self {
        ToledoPair { first, second }
    }
}

/// Genus of the base curve, at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::validation(format!("genus must be at least 2, got {g}")));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn g(self) -> i64 {
        i64::from(self.0)
    }
}

/// `(d1, d2) -> (d1 + d2, d1 - d2)`.
pub fn toledo_map(d: ToledoPair) -> ToledoPair {
    ToledoPair::new(d.first + d.second, d.first - d.second)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ToledoGroup {
    /// `SL(2,R) x SL(2,R)`: `|d_i| <= g - 1`.
    Sl2Pair,
    /// `SO0(2,2)`: `|c_i| <= 2g - 2`.
    So022,
}

pub fn milnor_wood_check(p: ToledoPair, group: ToledoGroup, genus: Genus) -> bool {
    let bound = match group {
        ToledoGroup::Sl2Pair => genus.g() - 1,
        ToledoGroup::So022 => 2 * genus.g() - 2,
    };
    p.first.abs() <= bound && p.second.abs() <= bound
}

/// A `Z/2`-valued Stiefel–Whitney class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct W2Label(u8);

impl W2Label {
    pub fn new(value: u8) -> Result<Self> {
        if value > 1 {
            return Err(Error::validation(format!("w2 label must be 0 or 1, got {value}")));
        }
        Ok(W2Label(value))
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftQuery {
    /// Lift of an `SO0(2,2)` bundle with Toledo pair `c` to `SL(2,R)²`.
    So022 { c: ToledoPair, genus: Genus },
    /// Lift of an `SO0(3,3)` bundle with labels `(b1, b2)` to `SL(4,R)`.
    So033 { b1: W2Label, b2: W2Label },
}

pub fn liftable(query: LiftQuery) -> bool {
    match query {
        LiftQuery::So022 { c, genus } => {
            (c.first - c.second).rem_euclid(2) == 0 && milnor_wood_check(c, ToledoGroup::So022, genus)
        }
        LiftQuery::So033 { b1, b2 } => b1 == b2,
    }
}

/// An element of `(Z/2)^(2g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionVector {
    bits: Vec<u8>,
}

impl TorsionVector {
    pub fn new(bits: Vec<u8>, genus: Genus) -> Result<Self> {
        if bits.len() != 2 * genus.get() as usize {
            return Err(Error::validation(format!("torsion vector needs {} bits, got {}", 2 * genus.get(), bits.len())));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::validation("torsion vector entries must be 0 or 1"));
        }
        Ok(TorsionVector { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// All `2^(2g)` elements.
    pub fn all(genus: Genus) -> Vec<TorsionVector> {
        let n = 2 * genus.get() as usize;
        (0..1u64 << n)
            .map(|m| TorsionVector { bits: (0..n).map(|i| ((m >> i) & 1) as u8).collect() })
            .collect()
    }
}

/// Elements of `(Z/4)^n` in lexicographic order.
fn z4_elements(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1u64 << (2 * n)).map(move |m| (0..n).map(|i| ((m >> (2 * i)) & 3) as u8).collect())
}

/// Solutions `L` of `2L = target` in `(Z/4)^n`.
fn halves(target: &[u8]) -> Vec<Vec<u8>> {
    z4_elements(target.len())
        .filter(|l| l.iter().zip(target).all(|(x, t)| (2 * x) % 4 == t % 4))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Isogeny {
    /// `SL(2) x SL(2) -> SO(4)`.
    I2,
    /// `SL(4) -> SO(6)`.
    I3,
}

/// Largest genus for which counts are enumerated.
pub const MAX_ENUMERATED_GENUS: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageCount {
    pub isogeny: Isogeny,
    pub genus: u32,
    /// Degree of the covering onto the image as stated for this isogeny.
    pub stated: u64,
    /// The number of solutions quoted alongside the `I2` statement.
    pub quoted_solutions: Option<u64>,
    /// Count found by enumeration in the model group, when `g` is small.
    pub enumerated: Option<u64>,
    /// For `I3`, the enumerated twists `ε` as elements of `(Z/2)^(2g)`.
    pub witnesses: Vec<TorsionVector>,
}

/// Fiber sizes of the maps induced on moduli by the isogenies.
///
/// `I3`: `E` and `E ⊗ ε` have the same image exactly when `ε² = O`; the
/// enumeration counts `ε` in `(Z/4)^(2g)` with `2ε = 0`.
/// `I2`: the preimages of `(M1, M2)` are pairs `(L1, L2)` with
/// `L1² = M1 M2` and `L2² = M1 M2⁻¹`; the enumeration solves both in
/// `(Z/4)^(2g)` for a sample `M1, M2` with both right-hand sides squares.
pub fn preimage_count(which: Isogeny, genus: Genus) -> PreimageCount {
    let g = genus.get();
    let n = 2 * g as usize;
    let small = g <= MAX_ENUMERATED_GENUS;
    match which {
        Isogeny::I3 => {
            let witnesses: Vec<TorsionVector> = if small {
                halves(&vec![0; n])
                    .into_iter()
                    .map(|e| TorsionVector { bits: e.iter().map(|x| x / 2).collect() })
                    .collect()
            } else {
                Vec::new()
            };
            PreimageCount {
                isogeny: which,
                genus: g,
                stated: 1 << n,
                quoted_solutions: None,
                enumerated: small.then_some(witnesses.len() as u64),
                witnesses,
            }
        }
        Isogeny::I2 => {
            let enumerated = small.then(|| {
                let mut m1 = vec![0u8; n];
                let mut m2 = vec![0u8; n];
                m1[0] = 2;
                m2[1] = 2;
                let sum: Vec<u8> = m1.iter().zip(&m2).map(|(a, b)| (a + b) % 4).collect();
                let diff: Vec<u8> = m1.iter().zip(&m2).map(|(a, b)| (4 + a - b) % 4).collect();
                (halves(&sum).len() * halves(&diff).len()) as u64
            });
            PreimageCount {
                isogeny: which,
                genus: g,
                stated: 1 << (n + 1),
                quoted_solutions: Some(1 << n),
                enumerated,
                witnesses: Vec::new(),
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CensusGroup {
    So033,
    So022,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So033Census {
    pub labels: Vec<(W2Label, W2Label)>,
    pub image_labels: Vec<(W2Label, W2Label)>,
    /// Hitchin components of `SL(4,R)` ...
    pub hitchin_source: u64,
    /// ... all mapping to the single Hitchin component of `SO0(3,3)`.
    pub hitchin_target: u64,
    pub total_components: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So022Census {
    pub genus: u32,
    /// Parity classes `(c1 mod 2, c2 mod 2)` reached by `SL(2,R)²` bundles.
    pub classes_hit: Vec<(u8, u8)>,
    /// Pairs `c` with `|c_i| <= 2g - 2`.
    pub bounded_pairs: u64,
    /// Those with `c1 ≡ c2 mod 2`.
    pub parity_matched: u64,
    /// Images `c = (d1 + d2, d1 - d2)` of pairs with `|d_i| <= g - 1`.
    pub images_of_bounded_d: u64,
    /// Parity-matched bounded pairs whose preimage `d` breaks `|d_i| <= g - 1`.
    pub parity_matched_unbounded_d: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Census {
    So033(So033Census),
    So022(So022Census),
}

pub fn component_census(group: CensusGroup, genus: Genus) -> Census {
    match group {
        CensusGroup::So033 => {
            let labels: Vec<(W2Label, W2Label)> = (0..2u8)
                .flat_map(|a| (0..2u8).map(move |b| (W2Label(a), W2Label(b))))
                .collect();
            let image_labels =
                labels.iter().copied().filter(|&(b1, b2)| liftable(LiftQuery::So033 { b1, b2 })).collect();
            let hitchin_target = 1;
            Census::So033(So033Census {
                total_components: labels.len() as u64 + hitchin_target,
                labels,
                image_labels,
                hitchin_source: 1 << (2 * genus.get()),
                hitchin_target,
            })
        }
        CensusGroup::So022 => {
            let g = genus.g();
            let b = 2 * g - 2;
            let mut classes_hit = Vec::new();
            let (mut bounded, mut matched, mut unbounded_d) = (0, 0, 0);
            for c1 in -b..=b {
                for c2 in -b..=b {
                    bounded += 1;
                    let c = ToledoPair::new(c1, c2);
                    if liftable(LiftQuery::So022 { c, genus }) {
                        matched += 1;
                        let d = ToledoPair::new((c1 + c2) / 2, (c1 - c2) / 2);
                        if !milnor_wood_check(d, ToledoGroup::Sl2Pair, genus) {
                            unbounded_d += 1;
                        }
                        let class = (c1.rem_euclid(2) as u8, c2.rem_euclid(2) as u8);
                        if !classes_hit.contains(&class) {
                            classes_hit.push(class);
                        }
                    }
                }
            }
            classes_hit.sort();
            let images = (2 * g - 1) * (2 * g - 1);
            Census::So022(So022Census {
                genus: genus.get(),
                classes_hit,
                bounded_pairs: bounded as u64,
                parity_matched: matched as u64,
                images_of_bounded_d: images as u64,
                parity_matched_unbounded_d: unbounded_d as u64,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct So22Assembly {
    pub field: HiggsBlockField,
    pub base: BaseSO4,
    /// Degrees of `M1 = N1 N2` and `M2 = N1 N2⁻¹`.
    pub m_degrees: ToledoPair,
}

/// The `SO0(2,2)` Higgs field of `Φ_i = [[0, β_i], [γ_i, 0]]` on
/// `N_i ⊕ N_i⁻¹`: `Φ1 ⊗ I + I ⊗ Φ2` on the tensor product, split as
/// `W1 = N1N2 ⊕ (N1N2)⁻¹` and `W2 = N1N2⁻¹ ⊕ N1⁻¹N2`, where
/// `α = [[β2, β1], [γ1, γ2]]`.
pub fn assemble_so22(
    n_degrees: ToledoPair,
    beta: [&QPoly; 2],
    gamma: [&QPoly; 2],
    orientation: Sign,
) -> Result<So22Assembly> {
    let zero = QPoly::zero();
    let phi = |b: &QPoly, c: &QPoly| -> PolyMatrix {
        Matrix::from_rows(vec![vec![zero.clone(), b.clone()], vec![c.clone(), zero.clone()]]).unwrap()
    };
    let x = d_iso2(&phi(beta[0], gamma[0]), &phi(beta[1], gamma[1]))?;
    // Tensor basis n_a ⊗ n_b has index 2a + b; W1 = {0, 3}, W2 = {1, 2}.
    let order = [0, 3, 1, 2];
    let blocked = x.select(&order, &order);
    let q4 = QuadraticForm::q4();
    let gram = q4.gram().select(&order, &order);
    let q1: QMatrix = gram.block(0, 0, 2, 2);
    let q2: QMatrix = gram.block(2, 2, 2, 2);
    let field = HiggsBlockField::new(blocked, 2, q1, q2)
        .map_err(|e| Error::internal(format!("SO(2,2) block structure: {e}")))?
        .with_degrees(vec![n_degrees.first + n_degrees.second, n_degrees.first - n_degrees.second]);
    let a = |i: usize| -(beta[i] * gamma[i]);
    let base = so4_base(&BaseSL2Pair::new(a(0), a(1)), so4_sign(orientation));
    if field.char_poly()? != base.quartic() {
        return Err(Error::internal("assembled Higgs field does not have the SO(4) spectral quartic"));
    }
    let pf = orientation.apply(q4.lower(&x).pfaffian()?);
    if pf != base.pf {
        return Err(Error::internal("Pfaffian of the assembled field disagrees with the base point"));
    }
    Ok(So22Assembly { field, base, m_degrees: toledo_map(n_degrees) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::spectral::zpoly;

    fn genus(g: u32) -> Genus {
        Genus::new(g).unwrap()
    }

    #[test]
    fn toledo_and_bounds() {
        assert_eq!(toledo_map(ToledoPair::new(2, 1)), ToledoPair::new(3, 1));
        assert_eq!(toledo_map(ToledoPair::new(0, 0)), ToledoPair::new(0, 0));
        assert!(!milnor_wood_check(ToledoPair::new(2, 0), ToledoGroup::Sl2Pair, genus(2)));
        assert!(milnor_wood_check(ToledoPair::new(2, 2), ToledoGroup::So022, genus(2)));
        for g in 2..6 {
            assert!(milnor_wood_check(ToledoPair::new(0, 0), ToledoGroup::Sl2Pair, genus(g)));
        }
        assert!(Genus::new(1).is_err());
    }

    #[test]
    fn lifting() {
        let g = genus(2);
        assert!(!liftable(LiftQuery::So022 { c: ToledoPair::new(1, 2), genus: g }));
        assert!(liftable(LiftQuery::So022 { c: ToledoPair::new(0, 0), genus: g }));
        let one = W2Label::new(1).unwrap();
        let zero = W2Label::new(0).unwrap();
        assert!(liftable(LiftQuery::So033 { b1: one, b2: one }));
        assert!(!liftable(LiftQuery::So033 { b1: one, b2: zero }));
        assert!(W2Label::new(2).is_err());
    }

    #[test]
    fn counts() {
        let c = preimage_count(Isogeny::I3, genus(2));
        assert_eq!((c.stated, c.enumerated), (16, Some(16)));
        assert_eq!(c.witnesses.len(), 16);
        assert_eq!(TorsionVector::all(genus(2)).len(), 16);
        let mut w = c.witnesses.clone();
        w.sort();
        assert_eq!(w, TorsionVector::all(genus(2)).into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
        let c = preimage_count(Isogeny::I2, genus(2));
        assert_eq!((c.stated, c.quoted_solutions, c.enumerated), (32, Some(16), Some(256)));
        assert_eq!(preimage_count(Isogeny::I3, genus(3)).enumerated, Some(64));
        assert_eq!(preimage_count(Isogeny::I3, genus(5)).enumerated, None);
    }

    #[test]
    fn censuses() {
        let Census::So033(c) = component_census(CensusGroup::So033, genus(2)) else { panic!() };
        assert_eq!(c.labels.len(), 4);
        assert_eq!(c.image_labels.len(), 2);
        assert!(c.image_labels.iter().all(|(a, b)| a == b));
        assert_eq!((c.hitchin_source, c.hitchin_target, c.total_components), (16, 1, 5));
        let Census::So022(c) = component_census(CensusGroup::So022, genus(2)) else { panic!() };
        assert_eq!(c.classes_hit, vec![(0, 0), (1, 1)]);
        assert_eq!(c.bounded_pairs, 25);
        assert_eq!(c.parity_matched, 13);
        assert_eq!(c.images_of_bounded_d, 9);
        assert_eq!(c.parity_matched_unbounded_d, 4);
    }

    #[test]
    fn so22_examples() {
        let one = zpoly(&[1]);
        let a1 = zpoly(&[3, 1]);
        let asm = assemble_so22(ToledoPair::new(2, 1), [&one, &one], [&-&a1, &-&one], Sign::Plus).unwrap();
        assert_eq!(asm.m_degrees, ToledoPair::new(3, 1));
        assert_eq!(asm.field.degrees(), &[3, 1]);
        let m1 = zpoly(&[-1]);
        let asm = assemble_so22(ToledoPair::new(0, 0), [&one, &one], [&one, &m1], Sign::Plus).unwrap();
        assert_eq!(asm.field.upper_right(), Matrix::from_rows(vec![vec![one.clone(), one.clone()], vec![one.clone(), m1.clone()]]).unwrap());
        assert_eq!((asm.base.b1.clone(), asm.base.pf.clone()), (zpoly(&[]), zpoly(&[-2])));
        let quartic = asm.base.quartic();
        assert_eq!(quartic.coeffs().iter().map(|c| c.coeff(0)).collect::<Vec<_>>(), vec![rat(4), rat(0), rat(0), rat(0), rat(1)]);
    }
}
