//! Seeded end-to-end verification suite.
//!
//! Each check draws its samples from its own ChaCha8 stream, so the rows are
//! independent of one another and a fixed seed reproduces the report byte for
//! byte.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::Matrix;
use crate::covers::{
    correspondence_push, norm, ramification_check, self_product_minus_diagonal, symmetrize, twist_ledger, Covering,
    Divisor, FiberKind, FiberModel, TwistContext,
};
use crate::error::{Error, Result};
use crate::invariants::{
    assemble_so22, component_census, liftable, milnor_wood_check, preimage_count, toledo_map, Census, CensusGroup,
    Genus, Isogeny, LiftQuery, ToledoGroup, ToledoPair,
};
use crate::lie::{
    alpha_block, build_block_higgs_so33, d_iso2, d_iso3, hodge_split, iso2_group, iso3_group, split_conjugate,
    QuadraticForm, Sign,
};
use crate::spectral::{
    is_even_in_eta, lie_quartic, lie_sextic, so4_base, so4_oracle, so4_sign, so6_base, so6_oracle, so6_sign,
    zpoly, BaseSL2Pair, BaseSL4,
};
use crate::{frac, rat, CurvePoly, QMatrix, QPoly, Rational};

/// Random inputs with small numerators and denominators.
pub mod sample {
    use super::*;

    pub fn rational(rng: &mut impl Rng) -> Rational {
        frac(rng.gen_range(-9..=9), rng.gen_range(1..=4))
    }

    pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
        loop {
            let x = rational(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A polynomial in `z` of degree at most `max_deg`.
    pub fn poly(rng: &mut impl Rng, max_deg: usize) -> QPoly {
        let deg = rng.gen_range(0..=max_deg);
        QPoly::new((0..=deg).map(|_| rational(rng)).collect())
    }

    pub fn matrix(rng: &mut impl Rng, n: usize) -> QMatrix {
        Matrix::from_fn(n, n, |_, _| rational(rng))
    }

    pub fn traceless(rng: &mut impl Rng, n: usize) -> QMatrix {
        let mut m = matrix(rng, n);
        let t = m.trace() - m.get(n - 1, n - 1).clone();
        m.set(n - 1, n - 1, -t);
        m
    }

    pub fn symmetric_traceless(rng: &mut impl Rng, n: usize) -> QMatrix {
        let m = traceless(rng, n);
        let s = &m + &m.transpose();
        s.scale(&frac(1, 2))
    }

    /// Determinant one: elementary row operations applied to a unimodular
    /// diagonal matrix.
    pub fn unimodular(rng: &mut impl Rng, n: usize) -> QMatrix {
        let mut diag: Vec<Rational> = (0..n - 1).map(|_| nonzero_rational(rng)).collect();
        let prod = diag.iter().fold(Rational::one(), |acc, d| acc * d);
        diag.push(prod.recip());
        let mut m = Matrix::diagonal(&diag);
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let j = (i + rng.gen_range(1..n)) % n;
            let t = rational(rng);
            let mut e = QMatrix::identity(n);
            e.set(i, j, t);
            m = &e * &m;
        }
        m
    }

    /// `Mᵀ D M` with `det D` a square, so `det q` is a rational square.
    pub fn form_with_square_det(rng: &mut impl Rng) -> QMatrix {
        let d: Vec<Rational> = (0..3).map(|_| nonzero_rational(rng)).collect();
        let last = &d[0] * &d[1] * &d[2];
        let diag = Matrix::diagonal(&[d[0].clone(), d[1].clone(), d[2].clone(), last]);
        let m = unimodular(rng, 4);
        &(&m.transpose() * &diag) * &m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub id: u8,
    pub name: &'static str,
    pub samples: usize,
    pub passed: bool,
    pub detail: String,
}

impl CheckRow {
    fn new(id: u8, name: &'static str, samples: usize, failures: Vec<String>, ok_detail: String) -> Self {
        let passed = failures.is_empty();
        let detail = if passed { ok_detail } else { failures.join("; ") };
        CheckRow { id, name, samples, passed, detail }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub orientation: Sign,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 7, samples: 100, orientation: Sign::Plus }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.config.seed,
            "samples": self.config.samples,
            "orientation": self.config.orientation.value(),
            "passed": self.passed(),
            "checks": self.rows.iter().map(|r| json!({
                "id": r.id,
                "name": r.name,
                "samples": r.samples,
                "status": r.status(),
                "detail": r.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn table(&self) -> String {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut out = format!(
            "seed {}  samples {}  orientation {:+}\n",
            self.config.seed,
            self.config.samples,
            self.config.orientation.value()
        );
        for r in &self.rows {
            out.push_str(&format!("{:>2}  {:<width$}  {}  {}\n", r.id, r.name, r.status(), r.detail));
        }
        out.push_str(if self.passed() { "all checks passed\n" } else { "some checks FAILED\n" });
        out
    }
}

/// The generator for check `id`: one ChaCha8 stream per check.
pub fn rng_for(seed: u64, id: u8) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(id));
    rng
}

pub fn run_all(config: VerifyConfig) -> Result<VerifyReport> {
    let (seed, n, o) = (config.seed, config.samples, config.orientation);
    let rows = vec![
        check_so4_base(&mut rng_for(seed, 1), n, o)?,
        check_so6_base(&mut rng_for(seed, 2), n, o)?,
        check_lie_spectral(&mut rng_for(seed, 3), n)?,
        check_structure(&mut rng_for(seed, 4), n)?,
        check_alpha_pfaffian(&mut rng_for(seed, 5), n)?,
        check_hodge(&mut rng_for(seed, 6), n, o)?,
        check_ramification()?,
        check_prym()?,
        check_invariants()?,
        check_so22(&mut rng_for(seed, 10), n, o)?,
    ];
    Ok(VerifyReport { config, rows })
}

fn eta(coeffs: &[i64]) -> CurvePoly {
    CurvePoly::new(coeffs.iter().map(|&c| zpoly(&[c])).collect())
}

pub fn check_so4_base(rng: &mut impl Rng, n: usize, orientation: Sign) -> Result<CheckRow> {
    let sign = so4_sign(orientation);
    let mut failures = Vec::new();
    let fixed = BaseSL2Pair::new(zpoly(&[-1]), zpoly(&[-4]));
    let expected = eta(&[9, 0, -10, 0, 1]);
    if so4_base(&fixed, sign).quartic() != expected || so4_oracle(&fixed)? != expected {
        failures.push("fixed instance (-1, -4) does not give η⁴ - 10η² + 9".to_string());
    }
    for i in 0..n {
        let b = BaseSL2Pair::new(sample::poly(rng, 6), sample::poly(rng, 6));
        let quartic = so4_base(&b, sign).quartic();
        if quartic != so4_oracle(&b)? || !is_even_in_eta(&quartic) {
            failures.push(format!("sample {i}: quartic differs from the oracle"));
        }
    }
    Ok(CheckRow::new(1, "SO(4) base map equals the quartic oracle", n, failures, format!("{n} random pairs, deg <= 6, and (-1, -4)")))
}

pub fn check_so6_base(rng: &mut impl Rng, n: usize, orientation: Sign) -> Result<CheckRow> {
    let sign = so6_sign(orientation);
    let mut failures = Vec::new();
    for (a, expected) in [([-5, 0, 4], eta(&[0, 0, 9, 0, -10, 0, 1])), ([0, 1, 0], eta(&[-1, 0, 0, 0, 0, 0, 1]))] {
        let b = BaseSL4::new(zpoly(&[a[0]]), zpoly(&[a[1]]), zpoly(&[a[2]]));
        if so6_base(&b, sign).sextic() != expected || so6_oracle(&b)? != expected {
            failures.push(format!("fixed instance {a:?} gives the wrong sextic"));
        }
    }
    for i in 0..n {
        let b = BaseSL4::new(sample::poly(rng, 6), sample::poly(rng, 6), sample::poly(rng, 6));
        let base = so6_base(&b, sign);
        let sextic = base.sextic();
        if sextic != so6_oracle(&b)? {
            failures.push(format!("sample {i}: sextic differs from the oracle"));
        }
        if sextic.coeffs()[0] != -(&base.pf * &base.pf) || !is_even_in_eta(&sextic) {
            failures.push(format!("sample {i}: constant term is not -pf²"));
        }
    }
    Ok(CheckRow::new(2, "SO(6) base map equals the sextic oracle", n, failures, format!("{n} random triples, deg <= 6, and two fixed instances")))
}

pub fn check_lie_spectral(rng: &mut impl Rng, n: usize) -> Result<CheckRow> {
    let mut failures = Vec::new();
    for i in 0..n {
        let b = BaseSL4::new(sample::poly(rng, 4), sample::poly(rng, 4), sample::poly(rng, 4));
        if lie_sextic(&b)? != so6_oracle(&b)? {
            failures.push(format!("sample {i}: char poly of d_iso3(C) differs from the sextic oracle"));
        }
        let p = BaseSL2Pair::new(sample::poly(rng, 4), sample::poly(rng, 4));
        if lie_quartic(&p)? != so4_oracle(&p)? {
            failures.push(format!("sample {i}: char poly of d_iso2 differs from the quartic oracle"));
        }
    }
    Ok(CheckRow::new(3, "Lie char polys equal the spectral oracles", n, failures, format!("{n} companion matrices of each kind")))
}

pub fn check_structure(rng: &mut impl Rng, n: usize) -> Result<CheckRow> {
    let (q4, q6) = (QuadraticForm::q4(), QuadraticForm::q6());
    let mut failures = Vec::new();
    let bracket = |a: &QMatrix, b: &QMatrix| &(a * b) - &(b * a);
    for i in 0..n {
        let (a1, a2, a) = (sample::traceless(rng, 2), sample::traceless(rng, 2), sample::traceless(rng, 4));
        if !q4.is_skew(&d_iso2(&a1, &a2)?) || !q6.is_skew(&d_iso3(&a)?) {
            failures.push(format!("sample {i}: derivative image is not skew"));
        }
        let b = sample::traceless(rng, 4);
        if d_iso3(&bracket(&a, &b))? != bracket(&d_iso3(&a)?, &d_iso3(&b)?) {
            failures.push(format!("sample {i}: d_iso3 does not preserve brackets"));
        }
        let (g1, g2, h1, h2) =
            (sample::unimodular(rng, 2), sample::unimodular(rng, 2), sample::unimodular(rng, 2), sample::unimodular(rng, 2));
        let x = iso2_group(&g1, &g2)?;
        if !q4.preserves(&x) || !x.det()?.is_one() {
            failures.push(format!("sample {i}: iso2 image is not in SO(4)"));
        }
        if iso2_group(&(&g1 * &h1), &(&g2 * &h2))? != &x * &iso2_group(&h1, &h2)? {
            failures.push(format!("sample {i}: iso2 is not multiplicative"));
        }
        let (g, h) = (sample::unimodular(rng, 4), sample::unimodular(rng, 4));
        let y = iso3_group(&g)?;
        if !q6.preserves(&y) || !y.det()?.is_one() {
            failures.push(format!("sample {i}: iso3 image is not in SO(6)"));
        }
        if iso3_group(&(&g * &h))? != &y * &iso3_group(&h)? {
            failures.push(format!("sample {i}: iso3 is not multiplicative"));
        }
    }
    // Diagonal sign matrices of determinant one: only ±I lie in the kernel.
    let signs = |n: usize| -> Vec<QMatrix> {
        (0..1u32 << n)
            .map(|m| Matrix::diagonal(&(0..n).map(|k| rat(if m >> k & 1 == 1 { -1 } else { 1 })).collect::<Vec<_>>()))
            .filter(|d: &QMatrix| d.det().map(|x| x.is_one()).unwrap_or(false))
            .collect()
    };
    let kernel3: Vec<QMatrix> = signs(4).into_iter().filter(|d| iso3_group(d).ok() == Some(QMatrix::identity(6))).collect();
    if kernel3 != vec![QMatrix::identity(4), -&QMatrix::identity(4)] && kernel3 != vec![-&QMatrix::identity(4), QMatrix::identity(4)] {
        failures.push(format!("iso3 kernel among diagonal sign matrices has {} elements", kernel3.len()));
    }
    let mut kernel2 = 0;
    for d1 in signs(2) {
        for d2 in signs(2) {
            if iso2_group(&d1, &d2)? == QMatrix::identity(4) {
                kernel2 += 1;
                if d1 != d2 {
                    failures.push("iso2 kernel contains a pair other than ±(I, I)".to_string());
                }
            }
        }
    }
    if kernel2 != 2 {
        failures.push(format!("iso2 kernel among diagonal sign pairs has {kernel2} elements"));
    }
    Ok(CheckRow::new(4, "isogenies preserve the forms and are homomorphisms", n, failures, format!("{n} samples; kernels are {{±I}}")))
}

pub fn check_alpha_pfaffian(rng: &mut impl Rng, n: usize) -> Result<CheckRow> {
    let q6 = QuadraticForm::q6();
    let mut failures = Vec::new();
    let mut ratio: Option<Rational> = None;
    for i in 0..n {
        let a = sample::symmetric_traceless(rng, 4);
        let x = d_iso3(&a)?;
        let alpha = alpha_block(&a)?;
        let expected = Matrix::from_blocks(&QMatrix::zeros(3, 3), &alpha, &alpha.transpose(), &QMatrix::zeros(3, 3))?;
        if split_conjugate(&x)? != expected {
            failures.push(format!("sample {i}: split conjugate is not [[0, α], [αᵗ, 0]]"));
        }
        let pf = q6.lower(&x).pfaffian()?;
        let det = alpha.det()?;
        if &pf * &pf != &det * &det {
            failures.push(format!("sample {i}: Pf² != det(α)²"));
        }
        if !det.is_zero() {
            let r = &pf / &det;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev != r => failures.push(format!("sample {i}: Pf / det(α) changed sign")),
                _ => {}
            }
        }
    }
    let sign = ratio.map(|r| if r.is_positive() { "+" } else { "-" }).unwrap_or("?");
    Ok(CheckRow::new(5, "alpha block and Pfaffian", n, failures, format!("{n} symmetric traceless samples; Pf = {sign}det(α)")))
}

pub fn check_hodge(rng: &mut impl Rng, n: usize, orientation: Sign) -> Result<CheckRow> {
    let mut failures = Vec::new();
    let forms: Vec<QMatrix> = std::iter::once(QuadraticForm::q4().gram().clone())
        .chain((0..n).map(|_| sample::form_with_square_det(rng)))
        .collect();
    for (i, gram) in forms.iter().enumerate() {
        let q = QuadraticForm::new(gram.clone(), Sign::Plus)?;
        let h = hodge_split(&q, orientation)?;
        let id = QMatrix::identity(6);
        if &h.star * &h.star != id {
            failures.push(format!("form {i}: *² != I"));
        }
        let plus = Matrix::from_columns(&h.plus_basis)?;
        let minus = Matrix::from_columns(&h.minus_basis)?;
        if plus.rank() != 3 || minus.rank() != 3 || h.change_of_basis().rank() != 6 {
            failures.push(format!("form {i}: eigenspaces are not 3 + 3"));
        }
        if &h.star * &plus != plus || &h.star * &minus != -&minus {
            failures.push(format!("form {i}: bases are not eigenvectors"));
        }
        if h.q_plus.gram().det()?.is_zero() || h.q_minus.gram().det()?.is_zero() {
            failures.push(format!("form {i}: restricted form is degenerate"));
        }
    }
    for i in 0..n {
        let a = crate::PolyMatrix::from_fn(4, 4, |_, _| sample::poly(rng, 2));
        let sym = &a + &a.transpose();
        let t = sym.trace();
        let mut sym = sym;
        let last = sym.get(3, 3).clone() - t;
        sym.set(3, 3, last);
        let block = build_block_higgs_so33(&sym)?;
        if block.char_poly()? != d_iso3(&sym)?.char_poly()? {
            failures.push(format!("sample {i}: block Higgs field changes the char poly"));
        }
    }
    Ok(CheckRow::new(6, "Hodge split and SO(3,3) block Higgs field", n, failures, format!("{} forms with square determinant; {n} block fields", n + 1)))
}

pub fn check_ramification() -> Result<CheckRow> {
    let mut failures = Vec::new();
    for kind in [FiberKind::Regular, FiberKind::GenericBranch] {
        let ledger = ramification_check(&FiberModel::of_kind("x", 4, kind))?;
        if !ledger.holds {
            failures.push(format!("{kind:?}: ramification identity fails"));
        }
        for context in [TwistContext::Sl4ToSo6, TwistContext::Sl2PairToSo4] {
            let t = twist_ledger(context, kind)?;
            if !t.balanced() {
                failures.push(format!("{context:?} {kind:?}: {} != {} + {}", t.total, t.first, t.second));
            }
        }
    }
    let t = twist_ledger(TwistContext::Sl4ToSo6, FiberKind::GenericBranch)?;
    if (t.total, t.first, t.second) != (6, 4, 2) {
        failures.push(format!("branch fiber twist degrees are ({}, {}, {})", t.total, t.first, t.second));
    }
    Ok(CheckRow::new(7, "ramification divisor identity", 2, failures, "both fiber profiles; branch twist 6 = 4 + 2".to_string()))
}

fn weight_vectors(len: usize) -> Vec<Vec<i64>> {
    (0..5usize.pow(len as u32))
        .map(|m| (0..len).map(|k| (m / 5usize.pow(k as u32) % 5) as i64 - 2).collect())
        .collect()
}

pub fn check_prym() -> Result<CheckRow> {
    let mut failures = Vec::new();
    let mut count = 0;
    for kind in [FiberKind::Regular, FiberKind::GenericBranch] {
        let f = FiberModel::of_kind("x", 4, kind);
        let sym = symmetrize(&self_product_minus_diagonal(&f)?)?;
        if !sym.is_fixed_point_free() || !sym.sigma_is_involution() {
            failures.push(format!("{kind:?}: σ is not a fixed-point-free involution"));
        }
        let labels: Vec<&str> = f.points().iter().map(|p| p.label.as_str()).collect();
        for w in weight_vectors(labels.len()) {
            if w.iter().sum::<i64>() != 0 {
                continue;
            }
            count += 1;
            let d = Divisor::from_pairs(labels.iter().copied().zip(w.iter().copied()));
            let pushed = correspondence_push(&d, &f)?;
            if !norm(&pushed, Covering::SigmaQuotient(&sym))?.is_zero() {
                failures.push(format!("{kind:?} {w:?}: σ-norm of the push is nonzero"));
            }
        }
    }
    Ok(CheckRow::new(8, "Prym preservation under the correspondence", count, failures, format!("{count} zero-sum weight vectors in {{-2..2}}")))
}

pub fn check_invariants() -> Result<CheckRow> {
    let mut failures = Vec::new();
    let mut images = std::collections::HashSet::new();
    for d1 in -10..=10 {
        for d2 in -10..=10 {
            images.insert(toledo_map(ToledoPair::new(d1, d2)));
        }
    }
    if images.len() != 441 {
        failures.push("toledo_map is not injective on [-10, 10]²".to_string());
    }
    for c1 in -10i64..=10 {
        for c2 in -10i64..=10 {
            let c = ToledoPair::new(c1, c2);
            let preimage = ToledoPair::new((c1 + c2).div_euclid(2), (c1 - c2).div_euclid(2));
            let hit = toledo_map(preimage) == c;
            if hit != ((c1 - c2) % 2 == 0) {
                failures.push(format!("toledo image disagrees with parity at {c:?}"));
            }
        }
    }
    for g in 2..=5u32 {
        let genus = Genus::new(g)?;
        let gi = i64::from(g);
        for d1 in -2 * gi..=2 * gi {
            for d2 in -2 * gi..=2 * gi {
                let d = ToledoPair::new(d1, d2);
                let sl2 = milnor_wood_check(d, ToledoGroup::Sl2Pair, genus);
                if sl2 != (d1.abs() < gi && d2.abs() < gi) {
                    failures.push(format!("g = {g}: SL(2) bound wrong at {d:?}"));
                }
                let so = milnor_wood_check(d, ToledoGroup::So022, genus);
                if so != (d1.abs() <= 2 * gi - 2 && d2.abs() <= 2 * gi - 2) {
                    failures.push(format!("g = {g}: SO(2,2) bound wrong at {d:?}"));
                }
                if sl2 && !liftable(LiftQuery::So022 { c: toledo_map(d), genus }) {
                    failures.push(format!("g = {g}: image of {d:?} is not liftable"));
                }
            }
        }
    }
    for g in [2, 3] {
        let count = preimage_count(Isogeny::I3, Genus::new(g)?);
        if count.enumerated != Some(1 << (2 * g)) {
            failures.push(format!("g = {g}: I3 enumeration gives {:?}", count.enumerated));
        }
    }
    let genus = Genus::new(2)?;
    match component_census(CensusGroup::So033, genus) {
        Census::So033(c) if c.image_labels.iter().all(|(a, b)| a == b) && c.image_labels.len() == 2 => {}
        _ => failures.push("SO(3,3) census image is not the (b, b) labels".to_string()),
    }
    let i2 = preimage_count(Isogeny::I2, genus);
    let three = (i2.stated, i2.quoted_solutions, i2.enumerated);
    if three != (32, Some(16), Some(256)) {
        failures.push(format!("I2 counts at g = 2 are {three:?}"));
    }
    Ok(CheckRow::new(
        9,
        "Toledo, Milnor-Wood and torsion counts",
        441,
        failures,
        "I2 at g = 2: stated 32, quoted 16, enumerated 256".to_string(),
    ))
}

pub fn check_so22(rng: &mut impl Rng, n: usize, orientation: Sign) -> Result<CheckRow> {
    let mut failures = Vec::new();
    for i in 0..n {
        let polys: Vec<QPoly> = (0..4).map(|_| sample::poly(rng, 3)).collect();
        let (b1, g1, b2, g2) = (&polys[0], &polys[1], &polys[2], &polys[3]);
        let d = ToledoPair::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        let asm = assemble_so22(d, [b1, b2], [g1, g2], orientation).map_err(|e| match e {
            Error::Validation(m) => Error::internal(m),
            other => other,
        })?;
        let base = so4_base(&BaseSL2Pair::new(-(b1 * g1), -(b2 * g2)), so4_sign(orientation));
        if asm.field.char_poly()? != base.quartic() {
            failures.push(format!("sample {i}: quartic differs from so4_base(-β1γ1, -β2γ2)"));
        }
        let m = ToledoPair::new(d.first + d.second, d.first - d.second);
        if asm.m_degrees != m || asm.field.degrees() != [m.first, m.second] {
            failures.push(format!("sample {i}: degree labels do not follow (d1 + d2, d1 - d2)"));
        }
    }
    Ok(CheckRow::new(10, "SO(2,2) assembly from SL(2,R) pairs", n, failures, format!("{n} random tuples, deg <= 3")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_is_deterministic() {
        let config = VerifyConfig { seed: 3, samples: 3, orientation: Sign::Minus };
        let a = run_all(config).unwrap();
        assert!(a.passed(), "{}", a.table());
        assert_eq!(a.to_json(), run_all(config).unwrap().to_json());
        assert_eq!(a.rows.len(), 10);
    }

    #[test]
    fn samples_are_well_formed() {
        let mut rng = rng_for(1, 0);
        for _ in 0..10 {
            assert!(sample::unimodular(&mut rng, 4).det().unwrap().is_one());
            assert!(sample::traceless(&mut rng, 4).trace().is_zero());
            let s = sample::symmetric_traceless(&mut rng, 4);
            assert!(s.is_symmetric() && s.trace().is_zero());
            let q = sample::form_with_square_det(&mut rng);
            assert!(crate::algebra::ExactSqrt::sqrt_exact(&q.det().unwrap()).is_some());
        }
    }
}
