use isolab::algebra::resultant;
use isolab::covers::{
    correspondence_push, norm, self_product_minus_diagonal, sigma_orbit_split, symmetrize, Covering, Divisor,
    FiberKind, FiberModel,
};
use isolab::invariants::{liftable, milnor_wood_check, toledo_map, Genus, LiftQuery, ToledoGroup, ToledoPair};
use isolab::json::{poly_from_json, poly_to_json};
use isolab::lie::{d_iso3, iso3_group, QuadraticForm, Sign};
use isolab::spectral::{is_even_in_eta, so4_base, so4_oracle, so6_base, BaseSL2Pair, BaseSL4};
use isolab::{frac, rat, Matrix, Poly, QMatrix, QPoly};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = isolab::Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn qmatrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(small_rational(), n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn traceless4() -> impl Strategy<Value = QMatrix> {
    qmatrix(4).prop_map(|mut m| {
        let t = m.trace() - m.get(3, 3).clone();
        m.set(3, 3, -t);
        m
    })
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_division_inverts_multiplication(p in qpoly(4), q in qpoly(3)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact_poly(&q).unwrap(), p);
    }

    #[test]
    fn gcd_divides_both(p in qpoly(4), q in qpoly(4), r in qpoly(2)) {
        let (a, b) = (&p * &r, &q * &r);
        let g = a.gcd(&b);
        prop_assume!(!g.is_zero());
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn resultant_is_antisymmetric_up_to_degree_sign(f in qpoly(4), g in qpoly(4)) {
        prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0);
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        prop_assert_eq!(fg, if m * n % 2 == 0 { gf } else { -gf });
    }

    #[test]
    fn resultant_vanishes_on_common_factor(f in qpoly(3), g in qpoly(3), c in small_rational()) {
        let linear = Poly::new(vec![-c, rat(1)]);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert!(resultant(&(&f * &linear), &(&g * &linear)).unwrap().is_zero());
    }

    #[test]
    fn determinant_is_multiplicative(a in qmatrix(4), b in qmatrix(4)) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn cayley_hamilton(a in qmatrix(4)) {
        prop_assert!(a.char_poly().unwrap().eval_matrix(&a).unwrap().is_zero());
    }

    #[test]
    fn pfaffian_squares_to_determinant(a in qmatrix(6)) {
        let skew = &a - &a.transpose();
        let pf = skew.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, skew.det().unwrap());
    }

    #[test]
    fn d_iso3_is_equivariant(a in traceless4(), g in qmatrix(4)) {
        let det = g.det().unwrap();
        prop_assume!(!det.is_zero());
        // Rescale one row so that det g = 1.
        let mut g = g;
        for j in 0..4 {
            let v = g.get(0, j) / &det;
            g.set(0, j, v);
        }
        let gi = g.inverse().unwrap();
        let lhs = d_iso3(&(&(&g * &a) * &gi)).unwrap();
        let big = iso3_group(&g).unwrap();
        let rhs = &(&big * &d_iso3(&a).unwrap()) * &big.inverse().unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(QuadraticForm::q6().preserves(&big));
    }

    #[test]
    fn so4_base_matches_oracle(a1 in qpoly(3), a2 in qpoly(3), s in sign()) {
        let b = BaseSL2Pair::new(a1, a2);
        prop_assert_eq!(so4_base(&b, s).quartic(), so4_oracle(&b).unwrap());
    }

    #[test]
    fn sextic_is_even_with_constant_minus_pf_squared(a2 in qpoly(3), a3 in qpoly(3), a4 in qpoly(3), s in sign()) {
        let base = so6_base(&BaseSL4::new(a2, a3, a4), s);
        let sextic = base.sextic();
        prop_assert!(is_even_in_eta(&sextic));
        prop_assert_eq!(sextic.coeffs()[0].clone(), -(&base.pf * &base.pf));
        prop_assert!(sextic.leading().unwrap().is_one());
    }

    #[test]
    fn poly_json_round_trip(p in qpoly(5)) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&p), "p").unwrap(), p);
    }

    #[test]
    fn correspondence_push_is_linear(
        w1 in prop::collection::vec(-3i64..=3, 4),
        w2 in prop::collection::vec(-3i64..=3, 4),
        branch in any::<bool>(),
    ) {
        let kind = if branch { FiberKind::GenericBranch } else { FiberKind::Regular };
        let f = FiberModel::of_kind("x", 4, kind);
        let labels: Vec<String> = f.points().iter().map(|p| p.label.clone()).collect();
        let d1 = Divisor::from_pairs(labels.iter().cloned().zip(w1.iter().copied()));
        let d2 = Divisor::from_pairs(labels.iter().cloned().zip(w2.iter().copied()));
        let sum = correspondence_push(&(&d1 + &d2), &f).unwrap();
        prop_assert_eq!(sum, &correspondence_push(&d1, &f).unwrap() + &correspondence_push(&d2, &f).unwrap());
        // Degree of the push is three times the degree on S.
        let pushed = correspondence_push(&d1, &f).unwrap();
        prop_assert_eq!(pushed.degree(), 3 * d1.degree());
    }

    #[test]
    fn orbit_split_recombines(w in prop::collection::vec(-4i64..=4, 6)) {
        let f = FiberModel::regular("x", 4);
        let sym = symmetrize(&self_product_minus_diagonal(&f).unwrap()).unwrap();
        let d = Divisor::from_pairs(sym.labels().into_iter().zip(w));
        let (inv, defect) = sigma_orbit_split(&d, &sym).unwrap();
        prop_assert_eq!(&inv + &defect, d);
        prop_assert_eq!(sym.apply_sigma(&inv).unwrap(), inv);
        // The defect has norm 0 or 1 on every orbit.
        let n = norm(&defect, Covering::SigmaQuotient(&sym)).unwrap();
        prop_assert!(n.weights().values().all(|&x| x == 1));
    }

    #[test]
    fn milnor_wood_pairs_lift(d1 in -12i64..=12, d2 in -12i64..=12, g in 2u32..8) {
        let genus = Genus::new(g).unwrap();
        let d = ToledoPair::new(d1, d2);
        if milnor_wood_check(d, ToledoGroup::Sl2Pair, genus) {
            let query = LiftQuery::So022 { c: toledo_map(d), genus };
            prop_assert!(liftable(query));
        }
        let c = toledo_map(d);
        prop_assert_eq!((c.first + c.second) / 2, d1);
        prop_assert_eq!((c.first - c.second).rem_euclid(2), 0);
    }
}
