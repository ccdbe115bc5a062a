//! Fiberwise model of spectral covers over one point `x` of the base curve.
//!
//! A fiber is a list of labeled points with multiplicities. From a degree-4
//! fiber we build the fiber of `(S ×_Σ S)_0` (ordered pairs, diagonal copy
//! removed), its quotient by `τ: (a, b) -> (b, a)` (the fiber of `Ŝ6`), and
//! the involution `σ: Sym[a, b] -> Sym[c, d]` onto the complementary pair.
//! Divisors are integer weights on point labels; all identities are checked
//! fiber by fiber. Only the generic profiles `(1, …, 1)` and `(2, 1, …, 1)`
//! are supported.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiberKind {
    Regular,
    GenericBranch,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiberPoint {
    pub label: String,
    pub mult: u32,
}

/// The fiber of a branched cover over one base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberModel {
    base_label: String,
    points: Vec<FiberPoint>,
}

fn point_labels(n: usize) -> impl Iterator<Item = String> {
    (1..=n).map(|i| format!("y{i}"))
}

impl FiberModel {
    pub fn new(base_label: impl Into<String>, points: Vec<FiberPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::validation("fiber has no points"));
        }
        if points.iter().any(|p| p.mult == 0) {
            return Err(Error::validation("fiber multiplicities must be positive"));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].iter().any(|q| q.label == p.label) {
                return Err(Error::validation(format!("duplicate fiber label {:?}", p.label)));
            }
            if p.label.contains([',', '[', ']', '(', ')']) {
                return Err(Error::validation(format!("fiber label {:?} contains a reserved character", p.label)));
            }
        }
        Ok(FiberModel { base_label: base_label.into(), points })
    }

    /// `degree` unramified points `y1, …`.
    pub fn regular(base_label: impl Into<String>, degree: usize) -> Self {
        let points = point_labels(degree).map(|label| FiberPoint { label, mult: 1 }).collect();
        FiberModel { base_label: base_label.into(), points }
    }

    /// A simple branch point: `y1` with multiplicity two, then unramified
    /// points `y2, …`, total `degree`.
    pub fn generic_branch(base_label: impl Into<String>, degree: usize) -> Self {
        assert!(degree >= 2, "a branch fiber has degree at least 2");
        let points = point_labels(degree - 1)
            .enumerate()
            .map(|(i, label)| FiberPoint { label, mult: if i == 0 { 2 } else { 1 } })
            .collect();
        FiberModel { base_label: base_label.into(), points }
    }

    pub fn of_kind(base_label: impl Into<String>, degree: usize, kind: FiberKind) -> Self {
        match kind {
            FiberKind::Regular => FiberModel::regular(base_label, degree),
            FiberKind::GenericBranch => FiberModel::generic_branch(base_label, degree),
        }
    }

    pub fn base_label(&self) -> &str {
        &self.base_label
    }

    pub fn points(&self) -> &[FiberPoint] {
        &self.points
    }

    pub fn degree(&self) -> u32 {
        self.points.iter().map(|p| p.mult).sum()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.points.iter().any(|p| p.label == label)
    }

    /// Errors with "non-generic fiber" for any profile other than all ones or
    /// a single double point.
    pub fn kind(&self) -> Result<FiberKind> {
        let doubles = self.points.iter().filter(|p| p.mult == 2).count();
        if self.points.iter().all(|p| p.mult == 1) {
            Ok(FiberKind::Regular)
        } else if doubles == 1 && self.points.iter().all(|p| p.mult <= 2) {
            Ok(FiberKind::GenericBranch)
        } else {
            let profile: Vec<String> = self.points.iter().map(|p| p.mult.to_string()).collect();
            Err(Error::validation(format!("non-generic fiber: ramification profile ({})", profile.join(","))))
        }
    }

    /// Points with the ramified one first, otherwise in input order.
    fn ordered(&self) -> Vec<&FiberPoint> {
        let mut pts: Vec<&FiberPoint> = self.points.iter().collect();
        pts.sort_by_key(|p| std::cmp::Reverse(p.mult));
        pts
    }

    fn mult_of(&self, label: &str) -> u32 {
        self.points.iter().find(|p| p.label == label).map_or(0, |p| p.mult)
    }

    /// `R = Σ (mult - 1) y`.
    pub fn ramification_divisor(&self) -> Divisor {
        Divisor::from_pairs(self.points.iter().map(|p| (p.label.clone(), i64::from(p.mult) - 1)))
    }

    /// The covering involution of a degree-2 fiber.
    fn deck_involution(&self) -> Result<Vec<usize>> {
        match (self.degree(), self.points.len()) {
            (2, 2) => Ok(vec![1, 0]),
            (2, 1) => Ok(vec![0]),
            _ => Err(Error::validation("expected a fiber of a double cover")),
        }
    }
}

/// Integer weights on point labels; zero weights are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    weights: BTreeMap<String, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Divisor::default()
    }

    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, i64)>) -> Self {
        let mut d = Divisor::new();
        for (label, w) in pairs {
            d.add_weight(label, w);
        }
        d
    }

    pub fn point(label: impl Into<String>) -> Self {
        Divisor::from_pairs([(label.into(), 1)])
    }

    pub fn add_weight(&mut self, label: impl Into<String>, weight: i64) {
        let label = label.into();
        let w = self.weights.get(&label).copied().unwrap_or(0) + weight;
        if w == 0 {
            self.weights.remove(&label);
        } else {
            self.weights.insert(label, w);
        }
    }

    pub fn get(&self, label: &str) -> i64 {
        self.weights.get(label).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> &BTreeMap<String, i64> {
        &self.weights
    }

    pub fn degree(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        Divisor::from_pairs(self.weights.iter().map(|(l, w)| (l.clone(), k * w)))
    }

    /// Relabels every point; weights landing on the same label add up.
    pub fn push_forward(&self, mut f: impl FnMut(&str) -> String) -> Self {
        Divisor::from_pairs(self.weights.iter().map(|(l, w)| (f(l), *w)))
    }

    fn check_support(&self, allowed: impl Fn(&str) -> bool, what: &str) -> Result<()> {
        match self.weights.keys().find(|l| !allowed(l)) {
            Some(l) => Err(Error::validation(format!("divisor point {l:?} is not in the {what}"))),
            None => Ok(()),
        }
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (l, w) in &rhs.weights {
            out.add_weight(l.clone(), *w);
        }
        out
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &-rhs
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        self.scale(-1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPoint {
    pub first: String,
    pub second: String,
    pub mult: u32,
}

impl PairPoint {
    pub fn label(&self) -> String {
        format!("({},{})", self.first, self.second)
    }
}

/// Fiber of a fiber product of covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFiber {
    base_label: String,
    points: Vec<PairPoint>,
    diagonal_removed: bool,
    /// The factor fiber of a self-product.
    source: Option<FiberModel>,
    /// `(σ1, σ2)` on a product of two double covers.
    involution: Option<Vec<usize>>,
}

impl PairFiber {
    pub fn base_label(&self) -> &str {
        &self.base_label
    }

    pub fn points(&self) -> &[PairPoint] {
        &self.points
    }

    pub fn diagonal_removed(&self) -> bool {
        self.diagonal_removed
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.points.iter().map(|p| p.mult).sum()
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(PairPoint::label).collect()
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    fn index_of(&self, first: &str, second: &str) -> Option<usize> {
        self.points.iter().position(|p| p.first == first && p.second == second)
    }

    fn contains(&self, label: &str) -> bool {
        self.points.iter().any(|p| p.label() == label)
    }
}

/// `S1 ×_Σ S2` over one point, for two double covers branched at
/// different points.
pub fn fiber_product(f1: &FiberModel, f2: &FiberModel) -> Result<PairFiber> {
    if f1.base_label != f2.base_label {
        return Err(Error::validation(format!(
            "fibers lie over different base points {:?} and {:?}",
            f1.base_label, f2.base_label
        )));
    }
    let (s1, s2) = (f1.deck_involution()?, f2.deck_involution()?);
    if f1.points.len() == 1 && f2.points.len() == 1 {
        return Err(Error::validation("non-generic fiber: both double covers branch over the same point"));
    }
    let n2 = f2.points.len();
    let mut points = Vec::new();
    let mut involution = Vec::new();
    for (i, a) in f1.points.iter().enumerate() {
        for (j, b) in f2.points.iter().enumerate() {
            points.push(PairPoint { first: a.label.clone(), second: b.label.clone(), mult: a.mult * b.mult });
            involution.push(s1[i] * n2 + s2[j]);
        }
    }
    Ok(PairFiber {
        base_label: f1.base_label.clone(),
        points,
        diagonal_removed: false,
        source: None,
        involution: Some(involution),
    })
}

/// Fiber of `(S ×_Σ S)_0`: ordered pairs with the diagonal copy of `S`
/// removed. Off the diagonal `(a, b)` has multiplicity `m_a m_b`; on it the
/// diagonal component takes `m_a` of the `m_a²`.
pub fn self_product_minus_diagonal(f: &FiberModel) -> Result<PairFiber> {
    f.kind()?;
    if f.degree() != 4 {
        return Err(Error::validation(format!("expected a degree-4 fiber, got degree {}", f.degree())));
    }
    let pts = f.ordered();
    let mut points = Vec::new();
    for a in &pts {
        for b in &pts {
            let mult = if a.label == b.label { a.mult * a.mult - a.mult } else { a.mult * b.mult };
            if mult > 0 {
                points.push(PairPoint { first: a.label.clone(), second: b.label.clone(), mult });
            }
        }
    }
    Ok(PairFiber {
        base_label: f.base_label.clone(),
        points,
        diagonal_removed: true,
        source: Some(f.clone()),
        involution: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoint {
    pub first: String,
    pub second: String,
    pub mult: u32,
}

impl SymPoint {
    pub fn label(&self) -> String {
        format!("Sym[{},{}]", self.first, self.second)
    }
}

/// Fiber of `Ŝ6 = (S ×_Σ S)_0 / τ` with its involution `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFiber {
    base_label: String,
    points: Vec<SymPoint>,
    sigma: Vec<usize>,
    source: FiberModel,
}

impl SymFiber {
    pub fn base_label(&self) -> &str {
        &self.base_label
    }

    pub fn points(&self) -> &[SymPoint] {
        &self.points
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn source(&self) -> &FiberModel {
        &self.source
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(SymPoint::label).collect()
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.points.iter().map(|p| p.mult).sum()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &j)| i != j)
    }

    pub fn sigma_is_involution(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &j)| self.sigma[j] == i)
    }

    fn index_of_label(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label() == label)
    }

    fn index_of_pair(&self, a: &str, b: &str) -> Option<usize> {
        self.points.iter().position(|p| (p.first == a && p.second == b) || (p.first == b && p.second == a))
    }

    /// `σ`-orbits as `(label, members)`, labeled `[[a,b]]` after the member
    /// listed first.
    pub fn orbits(&self) -> Vec<(String, Vec<usize>)> {
        orbits_of(&self.sigma, |i| {
            let p = &self.points[i];
            format!("[[{},{}]]", p.first, p.second)
        })
    }

    /// `σ` acting on divisors.
    pub fn apply_sigma(&self, d: &Divisor) -> Result<Divisor> {
        d.check_support(|l| self.index_of_label(l).is_some(), "Sym fiber")?;
        Ok(d.push_forward(|l| self.points[self.sigma[self.index_of_label(l).unwrap()]].label()))
    }
}

fn orbits_of(perm: &[usize], label: impl Fn(usize) -> String) -> Vec<(String, Vec<usize>)> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut k = perm[start];
        while k != start {
            seen[k] = true;
            members.push(k);
            k = perm[k];
        }
        out.push((label(start), members));
    }
    out
}

/// Quotient by `τ`. A `τ`-orbit `{(a, b), (b, a)}` of total multiplicity `m`
/// gives `Sym[a, b]` with multiplicity `m / 2`; `σ` sends `Sym[a, b]` to the
/// pair left over when `a, b` are removed from the fiber counted with
/// multiplicity.
pub fn symmetrize(pf: &PairFiber) -> Result<SymFiber> {
    let source = match (&pf.source, pf.diagonal_removed) {
        (Some(s), true) => s,
        _ => return Err(Error::validation("symmetrization needs a self-product with the diagonal removed")),
    };
    let mut points: Vec<SymPoint> = Vec::new();
    for p in &pf.points {
        if points.iter().any(|s| s.first == p.second && s.second == p.first) {
            continue;
        }
        let total = if p.first == p.second {
            p.mult
        } else {
            let mirror = pf
                .index_of(&p.second, &p.first)
                .ok_or_else(|| Error::internal("pair fiber is not τ-symmetric"))?;
            p.mult + pf.points[mirror].mult
        };
        if total % 2 != 0 {
            return Err(Error::internal("τ-orbit has odd multiplicity"));
        }
        points.push(SymPoint { first: p.first.clone(), second: p.second.clone(), mult: total / 2 });
    }
    let mut sym = SymFiber { base_label: pf.base_label.clone(), points, sigma: Vec::new(), source: source.clone() };
    let multiset: Vec<&str> = source
        .ordered()
        .into_iter()
        .flat_map(|p| std::iter::repeat_n(p.label.as_str(), p.mult as usize))
        .collect();
    let mut sigma = Vec::with_capacity(sym.points.len());
    for p in &sym.points {
        let mut rest = multiset.clone();
        for label in [&p.first, &p.second] {
            let pos = rest.iter().position(|l| l == label).ok_or_else(|| Error::internal("pair not in fiber"))?;
            rest.remove(pos);
        }
        let image = sym
            .index_of_pair(rest[0], rest[1])
            .ok_or_else(|| Error::internal(format!("complement Sym[{},{}] missing", rest[0], rest[1])))?;
        sigma.push(image);
    }
    sym.sigma = sigma;
    Ok(sym)
}

/// `τ`-ramification index at a pair point: its multiplicity over that of
/// its image.
fn tau_index(sym: &SymFiber, p: &PairPoint) -> u32 {
    let s = &sym.points[sym.index_of_pair(&p.first, &p.second).unwrap()];
    p.mult / s.mult
}

/// One row of a [`RamificationLedger`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerRow {
    pub label: String,
    pub p1_pullback: i64,
    pub p2_pullback: i64,
    pub sym_pullback: i64,
    pub tau_ramification: i64,
}

/// Both sides of `p1⁻¹(R) + p2⁻¹(R) = π̂_τ⁻¹(R̂6) + 2 R0` on one fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationLedger {
    pub lhs: Divisor,
    pub rhs: Divisor,
    pub sym_pullback: Divisor,
    pub tau_ramification: Divisor,
    pub rows: Vec<LedgerRow>,
    pub holds: bool,
}

/// Checks the ramification identity on the pair fiber over `f`: `R` is the
/// ramification divisor of `S`, `R̂6` that of `Ŝ6 → Σ`, `R0` that of
/// `π̂_τ`, and preimages carry the weight of the image point.
pub fn ramification_check(f: &FiberModel) -> Result<RamificationLedger> {
    let pf = self_product_minus_diagonal(f)?;
    let sym = symmetrize(&pf)?;
    let r = f.ramification_divisor();
    let mut lhs = Divisor::new();
    let mut pulled = Divisor::new();
    let mut r0 = Divisor::new();
    let mut rows = Vec::new();
    for p in &pf.points {
        let label = p.label();
        let (w1, w2) = (r.get(&p.first), r.get(&p.second));
        let image = &sym.points[sym.index_of_pair(&p.first, &p.second).unwrap()];
        let ws = i64::from(image.mult) - 1;
        let wt = i64::from(tau_index(&sym, p)) - 1;
        lhs.add_weight(label.clone(), w1 + w2);
        pulled.add_weight(label.clone(), ws);
        r0.add_weight(label.clone(), wt);
        rows.push(LedgerRow { label, p1_pullback: w1, p2_pullback: w2, sym_pullback: ws, tau_ramification: wt });
    }
    let rhs = &pulled + &r0.scale(2);
    let holds = lhs == rhs;
    Ok(RamificationLedger { lhs, rhs, sym_pullback: pulled, tau_ramification: r0, rows, holds })
}

/// `p1*(D) + p2*(D)` on the pair fiber, counting ramification of the
/// projections: off the diagonal, `p1` near `(a, b)` is ramified to order
/// `m_b` (the local parameter is the one at `b`), and symmetrically for `p2`;
/// on the antidiagonal branch through `(a, a)` both are unramified.
pub fn pair_pullback(d: &Divisor, f: &FiberModel) -> Result<Divisor> {
    d.check_support(|l| f.contains(l), "fiber")?;
    let pf = self_product_minus_diagonal(f)?;
    Ok(Divisor::from_pairs(pf.points.iter().map(|p| {
        let (ma, mb) = (i64::from(f.mult_of(&p.first)), i64::from(f.mult_of(&p.second)));
        let (e1, e2) = if p.first == p.second { (1, 1) } else { (mb, ma) };
        (p.label(), e1 * d.get(&p.first) + e2 * d.get(&p.second))
    })))
}

/// The correspondence `D -> C` with `p1*D + p2*D = π̂_τ* C` on one fiber.
pub fn correspondence_push(d: &Divisor, f: &FiberModel) -> Result<Divisor> {
    let pulled = pair_pullback(d, f)?;
    let pf = self_product_minus_diagonal(f)?;
    let sym = symmetrize(&pf)?;
    let mut out = Divisor::new();
    for s in &sym.points {
        let p = &pf.points[pf.index_of(&s.first, &s.second).unwrap()];
        let e = i64::from(tau_index(&sym, p));
        let w = pulled.get(&p.label());
        if w % e != 0 {
            return Err(Error::internal("pulled-back divisor does not descend along τ"));
        }
        out.add_weight(s.label(), w / e);
    }
    if descend_check(&out, &pf, &sym) != pulled {
        return Err(Error::internal("pulled-back divisor is not τ-invariant"));
    }
    Ok(out)
}

/// `π̂_τ* C` on the pair fiber.
fn descend_check(c: &Divisor, pf: &PairFiber, sym: &SymFiber) -> Divisor {
    Divisor::from_pairs(pf.points.iter().map(|p| {
        let s = &sym.points[sym.index_of_pair(&p.first, &p.second).unwrap()];
        (p.label(), i64::from(tau_index(sym, p)) * c.get(&s.label()))
    }))
}

/// A covering whose norm map can be applied to a fiber divisor.
#[derive(Clone, Copy, Debug)]
pub enum Covering<'a> {
    /// `π: S -> Σ`.
    Spectral(&'a FiberModel),
    /// `Ŝ6 -> Ŝ6/σ`.
    SigmaQuotient(&'a SymFiber),
    /// `Ŝ4 -> Ŝ4/σ̂4` for a product of double covers.
    ProductQuotient(&'a PairFiber),
}

/// Push-forward of weights along the covering.
pub fn norm(d: &Divisor, covering: Covering<'_>) -> Result<Divisor> {
    match covering {
        Covering::Spectral(f) => {
            d.check_support(|l| f.contains(l), "fiber")?;
            Ok(Divisor::from_pairs([(f.base_label.clone(), d.degree())]))
        }
        Covering::SigmaQuotient(sym) => {
            d.check_support(|l| sym.index_of_label(l).is_some(), "Sym fiber")?;
            Ok(Divisor::from_pairs(
                sym.orbits()
                    .into_iter()
                    .map(|(label, members)| (label, members.iter().map(|&i| d.get(&sym.points[i].label())).sum())),
            ))
        }
        Covering::ProductQuotient(pf) => {
            let inv = pf.involution().ok_or_else(|| Error::validation("pair fiber carries no involution"))?;
            d.check_support(|l| pf.contains(l), "pair fiber")?;
            let orbits = orbits_of(inv, |i| format!("[[{},{}]]", pf.points[i].first, pf.points[i].second));
            Ok(Divisor::from_pairs(
                orbits
                    .into_iter()
                    .map(|(label, members)| (label, members.iter().map(|&i| d.get(&pf.points[i].label())).sum())),
            ))
        }
    }
}

/// True when every fiber divisor has vanishing norm.
pub fn prym_test(family: &[(Divisor, Covering<'_>)]) -> Result<bool> {
    for (d, covering) in family {
        if !norm(d, *covering)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordDivisor {
    pub divisor: Divisor,
    pub degree_parity_odd: bool,
}

/// `N - σ(N)`, whose `σ`-norm vanishes, with the parity of `deg N`.
pub fn mumford_divisor(n: &Divisor, sym: &SymFiber) -> Result<MumfordDivisor> {
    for label in n.weights().keys() {
        let i = sym
            .index_of_label(label)
            .ok_or_else(|| Error::validation(format!("divisor point {label:?} is not in the Sym fiber")))?;
        if sym.sigma[i] == i {
            return Err(Error::validation(format!("σ fixes {label}")));
        }
    }
    let divisor = n - &sym.apply_sigma(n)?;
    Ok(MumfordDivisor { divisor, degree_parity_odd: n.degree().rem_euclid(2) == 1 })
}

/// Splits `D = I + E` with `I` σ-invariant: on each orbit `{y, σy}`, `I`
/// takes `⌊(D(y) + D(σy)) / 2⌋` at both points and `E` is the remainder,
/// which vanishes on orbits where `D(y) = D(σy)`.
pub fn sigma_orbit_split(d: &Divisor, sym: &SymFiber) -> Result<(Divisor, Divisor)> {
    d.check_support(|l| sym.index_of_label(l).is_some(), "Sym fiber")?;
    let mut invariant = Divisor::new();
    for (_, members) in sym.orbits() {
        let total: i64 = members.iter().map(|&i| d.get(&sym.points[i].label())).sum();
        let level = total.div_euclid(members.len() as i64);
        for &i in &members {
            invariant.add_weight(sym.points[i].label(), level);
        }
    }
    let defect = d - &invariant;
    Ok((invariant, defect))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistContext {
    /// `S` of degree 4 and `Ŝ6`, related through `(S ×_Σ S)_0`.
    Sl4ToSo6,
    /// Two double covers and `Ŝ4 = S1 ×_Σ S2`.
    Sl2PairToSo4,
}

/// Degrees of the twisting divisors on one fiber: `total = first + second`.
///
/// For `Sl4ToSo6` these are `p1⁻¹R + p2⁻¹R`, `π̂_τ⁻¹R̂6` and `2R0`; for
/// `Sl2PairToSo4` they are `R` of `Ŝ4`, `p1*R1` and `p2*R2`, with the branch
/// fiber branched in the first factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistLedger {
    pub total: i64,
    pub first: i64,
    pub second: i64,
}

impl TwistLedger {
    pub fn balanced(&self) -> bool {
        self.total == self.first + self.second
    }
}

pub fn twist_ledger(context: TwistContext, kind: FiberKind) -> Result<TwistLedger> {
    match context {
        TwistContext::Sl4ToSo6 => {
            let ledger = ramification_check(&FiberModel::of_kind("x", 4, kind))?;
            Ok(TwistLedger {
                total: ledger.lhs.degree(),
                first: ledger.sym_pullback.degree(),
                second: ledger.tau_ramification.scale(2).degree(),
            })
        }
        TwistContext::Sl2PairToSo4 => {
            let f1 = FiberModel::of_kind("x", 2, kind);
            let f2 = FiberModel::regular("x", 2);
            let pf = fiber_product(&f1, &f2)?;
            let total: i64 = pf.points.iter().map(|p| i64::from(p.mult) - 1).sum();
            let (r1, r2) = (f1.ramification_divisor(), f2.ramification_divisor());
            let first: i64 = pf.points.iter().map(|p| r1.get(&p.first)).sum();
            let second: i64 = pf.points.iter().map(|p| r2.get(&p.second)).sum();
            Ok(TwistLedger { total, first, second })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fiber_divisor(weights: &[i64]) -> Divisor {
        Divisor::from_pairs(weights.iter().enumerate().map(|(i, &w)| (format!("y{}", i + 1), w)))
    }

    fn sym_of(kind: FiberKind) -> SymFiber {
        symmetrize(&self_product_minus_diagonal(&FiberModel::of_kind("x", 4, kind)).unwrap()).unwrap()
    }

    #[test]
    fn products_of_double_covers() {
        let reg = FiberModel::regular("x", 2);
        let br = FiberModel::generic_branch("x", 2);
        let pf = fiber_product(&reg, &reg).unwrap();
        assert_eq!(pf.points().len(), 4);
        assert!(pf.points().iter().all(|p| p.mult == 1));
        assert!(pf.involution().unwrap().iter().enumerate().all(|(i, &j)| i != j));
        let pf = fiber_product(&br, &reg).unwrap();
        assert_eq!(pf.points().iter().map(|p| p.mult).collect::<Vec<_>>(), vec![2, 2]);
        assert!(fiber_product(&br, &br).is_err());
        assert!(fiber_product(&reg, &FiberModel::regular("x'", 2)).unwrap_err().is_validation());
    }

    #[test]
    fn self_products() {
        let pf = self_product_minus_diagonal(&FiberModel::regular("x", 4)).unwrap();
        assert_eq!(pf.points().len(), 12);
        let pf = self_product_minus_diagonal(&FiberModel::generic_branch("x", 4)).unwrap();
        assert_eq!(pf.points().len(), 7);
        assert_eq!(pf.total_multiplicity(), 12);
        let mult = |a: &str, b: &str| pf.points()[pf.index_of(a, b).unwrap()].mult;
        assert_eq!(mult("y1", "y1"), 2);
        assert_eq!((mult("y1", "y2"), mult("y2", "y1"), mult("y1", "y3"), mult("y3", "y1")), (2, 2, 2, 2));
        assert_eq!((mult("y2", "y3"), mult("y3", "y2")), (1, 1));
        let pts = vec![FiberPoint { label: "p".into(), mult: 2 }, FiberPoint { label: "q".into(), mult: 2 }];
        let err = self_product_minus_diagonal(&FiberModel::new("x", pts).unwrap()).unwrap_err();
        assert!(err.to_string().contains("non-generic fiber"));
    }

    #[test]
    fn sym_fibers() {
        let reg = sym_of(FiberKind::Regular);
        assert_eq!(reg.points().len(), 6);
        assert!(reg.points().iter().all(|p| p.mult == 1));
        let br = sym_of(FiberKind::GenericBranch);
        let mults: Vec<(String, u32)> = br.points().iter().map(|p| (p.label(), p.mult)).collect();
        assert_eq!(
            mults,
            vec![
                ("Sym[y1,y1]".into(), 1),
                ("Sym[y1,y2]".into(), 2),
                ("Sym[y1,y3]".into(), 2),
                ("Sym[y2,y3]".into(), 1)
            ]
        );
        assert_eq!(br.sigma(), &[3, 2, 1, 0]);
        for s in [&reg, &br] {
            assert!(s.sigma_is_involution());
            assert!(s.is_fixed_point_free());
        }
        let sigma_y12 = reg.sigma()[reg.index_of_label("Sym[y1,y2]").unwrap()];
        assert_eq!(reg.points()[sigma_y12].label(), "Sym[y3,y4]");
    }

    #[test]
    fn ramification_identity() {
        let ledger = ramification_check(&FiberModel::generic_branch("x", 4)).unwrap();
        assert!(ledger.holds);
        let expected = Divisor::from_pairs([("(y1,y1)", 2), ("(y1,y2)", 1), ("(y2,y1)", 1), ("(y1,y3)", 1), ("(y3,y1)", 1)]);
        assert_eq!(ledger.lhs, expected);
        assert_eq!(ledger.tau_ramification, Divisor::point("(y1,y1)"));
        let ledger = ramification_check(&FiberModel::regular("x", 4)).unwrap();
        assert!(ledger.holds && ledger.lhs.is_zero() && ledger.rhs.is_zero());
    }

    #[test]
    fn pushes() {
        let reg = FiberModel::regular("x", 4);
        let c = correspondence_push(&fiber_divisor(&[1, -1, 0, 0]), &reg).unwrap();
        let expected = Divisor::from_pairs([
            ("Sym[y1,y3]", 1),
            ("Sym[y1,y4]", 1),
            ("Sym[y2,y3]", -1),
            ("Sym[y2,y4]", -1),
        ]);
        assert_eq!(c, expected);
        let br = FiberModel::generic_branch("x", 4);
        let c = correspondence_push(&fiber_divisor(&[1, 0, -1]), &br).unwrap();
        let expected =
            Divisor::from_pairs([("Sym[y1,y1]", 1), ("Sym[y2,y3]", -1), ("Sym[y1,y2]", 1), ("Sym[y1,y3]", -1)]);
        assert_eq!(c, expected);
        assert!(correspondence_push(&Divisor::new(), &br).unwrap().is_zero());
        assert!(correspondence_push(&Divisor::point("y9"), &br).unwrap_err().is_validation());
    }

    #[test]
    fn norms() {
        let reg = FiberModel::regular("x", 4);
        let sym = sym_of(FiberKind::Regular);
        let d = fiber_divisor(&[1, -1, 0, 0]);
        let c = correspondence_push(&d, &reg).unwrap();
        assert!(norm(&c, Covering::SigmaQuotient(&sym)).unwrap().is_zero());
        assert!(norm(&d, Covering::Spectral(&reg)).unwrap().is_zero());
        let br = FiberModel::generic_branch("x", 4);
        let sym = sym_of(FiberKind::GenericBranch);
        let c = correspondence_push(&fiber_divisor(&[2, 0, 1]), &br).unwrap();
        let nm = norm(&c, Covering::SigmaQuotient(&sym)).unwrap();
        assert_eq!(nm, Divisor::from_pairs([("[[y1,y1]]", 3), ("[[y1,y2]]", 6)]));
        let bad = Divisor::point("y1");
        assert!(!prym_test(&[(bad, Covering::Spectral(&reg))]).unwrap());
    }

    #[test]
    fn mumford_and_orbit_split() {
        let sym = sym_of(FiberKind::Regular);
        let y = Divisor::point("Sym[y1,y2]");
        let m = mumford_divisor(&y, &sym).unwrap();
        assert_eq!(m.divisor, Divisor::from_pairs([("Sym[y1,y2]", 1), ("Sym[y3,y4]", -1)]));
        assert!(m.degree_parity_odd);
        assert!(norm(&m.divisor, Covering::SigmaQuotient(&sym)).unwrap().is_zero());
        let zero = mumford_divisor(&Divisor::new(), &sym).unwrap();
        assert!(zero.divisor.is_zero() && !zero.degree_parity_odd);

        let (inv, def) = sigma_orbit_split(&m.divisor, &sym).unwrap();
        assert!(inv.is_zero());
        assert_eq!(def, m.divisor);
        let invariant = Divisor::from_pairs([("Sym[y1,y3]", 2), ("Sym[y2,y4]", 2)]);
        assert_eq!(sigma_orbit_split(&invariant, &sym).unwrap(), (invariant.clone(), Divisor::new()));
        let d = Divisor::from_pairs([("Sym[y1,y2]", 3), ("Sym[y3,y4]", 0), ("Sym[y1,y4]", -1)]);
        let (inv, def) = sigma_orbit_split(&d, &sym).unwrap();
        assert_eq!(&inv + &def, d);
        assert_eq!(sym.apply_sigma(&inv).unwrap(), inv);
    }

    #[test]
    fn twists() {
        let t = twist_ledger(TwistContext::Sl4ToSo6, FiberKind::GenericBranch).unwrap();
        assert_eq!((t.total, t.first, t.second), (6, 4, 2));
        let t = twist_ledger(TwistContext::Sl4ToSo6, FiberKind::Regular).unwrap();
        assert_eq!((t.total, t.first, t.second), (0, 0, 0));
        let t = twist_ledger(TwistContext::Sl2PairToSo4, FiberKind::GenericBranch).unwrap();
        assert_eq!((t.total, t.first, t.second), (2, 2, 0));
        assert!(t.balanced());
    }
}
