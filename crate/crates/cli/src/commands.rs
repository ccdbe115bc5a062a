//! One adapter per subcommand: decode the input, call the library, encode
//! the result.

use isolab::covers::{
    correspondence_push, fiber_product, norm, pair_pullback, ramification_check, self_product_minus_diagonal,
    symmetrize, twist_ledger, Covering, FiberModel, PairFiber, SymFiber, TwistContext,
};
use isolab::invariants::{
    assemble_so22, component_census, liftable, milnor_wood_check, preimage_count, toledo_map, Census, CensusGroup,
    Genus, Isogeny, LiftQuery, ToledoGroup, ToledoPair, W2Label,
};
use isolab::json::{
    curve_to_json, divisor_from_json, divisor_to_json, fiber_from_json, fiber_to_json, field, int_from_json,
    opt_field, poly_from_json, poly_matrix_from_json, poly_matrix_to_json, poly_to_json, qmatrix_from_json,
    qmatrix_to_json, rational_to_json,
};
use isolab::lie::{
    alpha_block, d_iso2, d_iso3, hodge_split, iso2_group, iso3_group, split_conjugate, QuadraticForm, Sign,
};
use isolab::spectral::{
    branch_locus, genericity_report, lie_quartic, lie_sextic, oriented_pfaffian, so4_base, so4_oracle, so4_sign,
    so6_base, so6_oracle, so6_sign, BaseSL2Pair, BaseSL4, HitchinBasePoint, Verdict,
};
use isolab::{Error, Matrix, PolyMatrix, QMatrix, Result};
use serde_json::{json, Value};

use crate::Outcome;

/// Adds `checks: [{name, status}]` and fails the outcome if any check did.
fn with_checks(mut report: Value, checks: &[(&str, bool)]) -> Outcome {
    let rows: Vec<Value> = checks
        .iter()
        .map(|(name, ok)| json!({"name": name, "status": if *ok { "PASS" } else { "FAIL" }}))
        .collect();
    report["checks"] = Value::Array(rows);
    if checks.iter().all(|(_, ok)| *ok) {
        Outcome::Ok(report)
    } else {
        Outcome::CheckFailed(report)
    }
}

fn pair(v: &Value, key: &str) -> Result<ToledoPair> {
    let arr = field(v, key, "")?
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::validation(format!("at {key}: expected [x, y]")))?;
    Ok(ToledoPair::new(int_from_json(&arr[0], &format!("{key}[0]"))?, int_from_json(&arr[1], &format!("{key}[1]"))?))
}

fn genus(v: &Value) -> Result<Genus> {
    let g = int_from_json(field(v, "genus", "")?, "genus")?;
    Genus::new(u32::try_from(g).map_err(|_| Error::validation("at genus: expected a nonnegative integer"))?)
}

fn string<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key, "")?.as_str().ok_or_else(|| Error::validation(format!("at {key}: expected a string")))
}

fn sign_json(s: Sign) -> Value {
    json!(s.value())
}

fn poly_field(v: &Value, key: &str) -> Result<isolab::QPoly> {
    poly_from_json(field(v, key, "")?, key)
}

pub fn iso_apply(input: &Value, group: bool) -> Result<Outcome> {
    let (image, form, map) = if let Some(a) = opt_field(input, "a") {
        let a = poly_matrix_from_json(a, "a")?;
        let image = if group { iso3_group(&a)? } else { d_iso3(&a)? };
        (image, QuadraticForm::q6(), if group { "iso3_group" } else { "d_iso3" })
    } else {
        let a1 = poly_matrix_from_json(field(input, "a1", "")?, "a1")?;
        let a2 = poly_matrix_from_json(field(input, "a2", "")?, "a2")?;
        let image = if group { iso2_group(&a1, &a2)? } else { d_iso2(&a1, &a2)? };
        (image, QuadraticForm::q4(), if group { "iso2_group" } else { "d_iso2" })
    };
    let report = json!({
        "map": map,
        "image": poly_matrix_to_json(&image),
        "char_poly": curve_to_json(&image.char_poly()?),
    });
    let checks: Vec<(&str, bool)> = if group {
        vec![
            ("image preserves the invariant form", form.preserves(&image)),
            ("image has determinant one", image.det()? == isolab::QPoly::constant(isolab::rat(1))),
        ]
    } else {
        vec![("image is skew for the invariant form", form.is_skew(&image))]
    };
    Ok(with_checks(report, &checks))
}

pub fn iso_alpha(input: &Value, orientation: Sign) -> Result<Outcome> {
    let a = poly_matrix_from_json(field(input, "a", "")?, "a")?;
    let alpha = alpha_block(&a)?;
    let x = d_iso3(&a)?;
    let conj = split_conjugate(&x)?;
    let zero = PolyMatrix::zeros(3, 3);
    let expected = Matrix::from_blocks(&zero, &alpha, &alpha.transpose(), &zero)?;
    let pf = oriented_pfaffian(&QuadraticForm::q6(), &x, orientation)?;
    let det = alpha.det()?;
    let report = json!({
        "orientation": sign_json(orientation),
        "alpha": poly_matrix_to_json(&alpha),
        "split_form": poly_matrix_to_json(&conj),
        "pfaffian": poly_to_json(&pf),
        "det_alpha": poly_to_json(&det),
    });
    Ok(with_checks(
        report,
        &[
            ("split conjugate is [[0, alpha], [alpha^t, 0]]", conj == expected),
            ("Pf^2 equals det(alpha)^2", &pf * &pf == &det * &det),
        ],
    ))
}

pub fn iso_hodge(input: &Value, orientation: Sign) -> Result<Outcome> {
    let q = QuadraticForm::new(qmatrix_from_json(field(input, "q", "")?, "q")?, Sign::Plus)?;
    let h = hodge_split(&q, orientation)?;
    let vectors = |vs: &[Vec<isolab::Rational>]| -> Value {
        Value::Array(vs.iter().map(|v| Value::Array(v.iter().map(rational_to_json).collect())).collect())
    };
    let report = json!({
        "orientation": sign_json(orientation),
        "star": qmatrix_to_json(&h.star),
        "plus_basis": vectors(&h.plus_basis),
        "minus_basis": vectors(&h.minus_basis),
        "q_plus": qmatrix_to_json(h.q_plus.gram()),
        "q_minus": qmatrix_to_json(h.q_minus.gram()),
    });
    let star_sq = &h.star * &h.star == QMatrix::identity(6);
    let nondegenerate = !h.q_plus.gram().det()?.eq(&isolab::rat(0)) && !h.q_minus.gram().det()?.eq(&isolab::rat(0));
    Ok(with_checks(report, &[("star squares to the identity", star_sq), ("restricted forms are nondegenerate", nondegenerate)]))
}

fn sl2_pair(input: &Value) -> Result<BaseSL2Pair> {
    Ok(BaseSL2Pair::new(poly_field(input, "a1")?, poly_field(input, "a2")?))
}

fn sl4(input: &Value) -> Result<BaseSL4> {
    Ok(BaseSL4::new(poly_field(input, "a2")?, poly_field(input, "a3")?, poly_field(input, "a4")?))
}

pub fn base_map_so4(input: &Value, orientation: Sign) -> Result<Outcome> {
    let base = so4_base(&sl2_pair(input)?, so4_sign(orientation));
    Ok(Outcome::Ok(json!({
        "orientation": sign_json(orientation),
        "sign": sign_json(base.sign),
        "b1": poly_to_json(&base.b1),
        "pf": poly_to_json(&base.pf),
        "quartic": curve_to_json(&base.quartic()),
    })))
}

pub fn base_map_so6(input: &Value, orientation: Sign) -> Result<Outcome> {
    let base = so6_base(&sl4(input)?, so6_sign(orientation));
    Ok(Outcome::Ok(json!({
        "orientation": sign_json(orientation),
        "sign": sign_json(base.sign),
        "b1": poly_to_json(&base.b1),
        "b2": poly_to_json(&base.b2),
        "pf": poly_to_json(&base.pf),
        "sextic": curve_to_json(&base.sextic()),
    })))
}

pub fn base_oracle(input: &Value, orientation: Sign) -> Result<Outcome> {
    let (mapped, oracle, lie) = if opt_field(input, "a1").is_some() {
        let b = sl2_pair(input)?;
        (so4_base(&b, so4_sign(orientation)).quartic(), so4_oracle(&b)?, lie_quartic(&b)?)
    } else {
        let b = sl4(input)?;
        (so6_base(&b, so6_sign(orientation)).sextic(), so6_oracle(&b)?, lie_sextic(&b)?)
    };
    let report = json!({
        "orientation": sign_json(orientation),
        "base_map": curve_to_json(&mapped),
        "oracle": curve_to_json(&oracle),
        "lie": curve_to_json(&lie),
    });
    Ok(with_checks(
        report,
        &[("base map equals the resultant oracle", mapped == oracle), ("Lie char poly equals the resultant oracle", lie == oracle)],
    ))
}

pub fn base_genericity(input: &Value) -> Result<Outcome> {
    let b = sl4(input)?;
    let report = genericity_report(&b)?;
    let locus = branch_locus(&HitchinBasePoint::Sl4(b))?;
    Ok(Outcome::Ok(json!({
        "verdict": match report.verdict { Verdict::Generic => "generic", Verdict::Degenerate => "degenerate" },
        "jacobian_full_rank": report.jacobian_full_rank,
        "jacobian_locus": poly_to_json(&report.jacobian_locus),
        "gcd_a3_a2sq_minus_a4": poly_to_json(&report.gcd_a3_a2sq_minus_a4),
        "gcd_a3_a2sq_minus_4a4": poly_to_json(&report.gcd_a3_a2sq_minus_4a4),
        "discriminant": poly_to_json(&locus.discriminant),
        "simple_branch_points": poly_to_json(&locus.simple_branch_points),
        "non_reduced": locus.non_reduced,
    })))
}

fn fiber(input: &Value) -> Result<FiberModel> {
    fiber_from_json(field(input, "fiber", "")?, "fiber")
}

fn pair_fiber_json(pf: &PairFiber) -> Value {
    json!({
        "base_label": pf.base_label(),
        "diagonal_removed": pf.diagonal_removed(),
        "total_multiplicity": pf.total_multiplicity(),
        "points": pf.points().iter().map(|p| json!({"label": p.label(), "mult": p.mult})).collect::<Vec<_>>(),
    })
}

fn sym_fiber_json(sym: &SymFiber) -> Value {
    let points = sym.points();
    json!({
        "base_label": sym.base_label(),
        "total_multiplicity": sym.total_multiplicity(),
        "fixed_point_free": sym.is_fixed_point_free(),
        "points": points.iter().zip(sym.sigma()).map(|(p, &s)| json!({
            "label": p.label(),
            "mult": p.mult,
            "sigma": points[s].label(),
        })).collect::<Vec<_>>(),
        "orbits": sym.orbits().into_iter().map(|(label, members)| json!({
            "label": label,
            "members": members.iter().map(|&i| points[i].label()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn cover_product(input: &Value) -> Result<Outcome> {
    let pf = if opt_field(input, "fiber").is_some() {
        self_product_minus_diagonal(&fiber(input)?)?
    } else {
        let f1 = fiber_from_json(field(input, "first", "")?, "first")?;
        let f2 = fiber_from_json(field(input, "second", "")?, "second")?;
        fiber_product(&f1, &f2)?
    };
    Ok(Outcome::Ok(pair_fiber_json(&pf)))
}

pub fn cover_sym(input: &Value) -> Result<Outcome> {
    let sym = symmetrize(&self_product_minus_diagonal(&fiber(input)?)?)?;
    let report = sym_fiber_json(&sym);
    Ok(with_checks(
        report,
        &[("sigma is a fixed-point-free involution", sym.is_fixed_point_free() && sym.sigma_is_involution())],
    ))
}

pub fn cover_ramcheck(input: &Value) -> Result<Outcome> {
    let f = fiber(input)?;
    let kind = f.kind()?;
    let ledger = ramification_check(&f)?;
    let twist = twist_ledger(TwistContext::Sl4ToSo6, kind)?;
    let report = json!({
        "fiber": fiber_to_json(&f),
        "lhs": divisor_to_json(&ledger.lhs),
        "rhs": divisor_to_json(&ledger.rhs),
        "rows": ledger.rows.iter().map(|r| json!({
            "label": r.label,
            "p1_pullback": r.p1_pullback,
            "p2_pullback": r.p2_pullback,
            "sym_pullback": r.sym_pullback,
            "tau_ramification": r.tau_ramification,
        })).collect::<Vec<_>>(),
        "twist_degrees": {"total": twist.total, "first": twist.first, "second": twist.second},
    });
    Ok(with_checks(
        report,
        &[("ramification divisor identity", ledger.holds), ("twist degrees add up", twist.balanced())],
    ))
}

pub fn divisor_push(input: &Value) -> Result<Outcome> {
    let f = fiber(input)?;
    let d = divisor_from_json(field(input, "divisor", "")?, "divisor")?;
    Ok(Outcome::Ok(json!({
        "pullback": divisor_to_json(&pair_pullback(&d, &f)?),
        "push": divisor_to_json(&correspondence_push(&d, &f)?),
    })))
}

pub fn divisor_norm(input: &Value) -> Result<Outcome> {
    let f = fiber(input)?;
    let d = divisor_from_json(field(input, "divisor", "")?, "divisor")?;
    let covering = string(input, "covering")?;
    let image = match covering {
        "spectral" => norm(&d, Covering::Spectral(&f))?,
        "sigma" => {
            let sym = symmetrize(&self_product_minus_diagonal(&f)?)?;
            norm(&d, Covering::SigmaQuotient(&sym))?
        }
        "product" => {
            let second = fiber_from_json(field(input, "second", "")?, "second")?;
            let pf = fiber_product(&f, &second)?;
            norm(&d, Covering::ProductQuotient(&pf))?
        }
        other => {
            return Err(Error::validation(format!(
                "at covering: expected \"spectral\", \"sigma\" or \"product\", got {other:?}"
            )))
        }
    };
    Ok(Outcome::Ok(json!({"covering": covering, "norm": divisor_to_json(&image), "zero": image.is_zero()})))
}

pub fn divisor_prym_test(input: &Value) -> Result<Outcome> {
    let f = fiber(input)?;
    let d = divisor_from_json(field(input, "divisor", "")?, "divisor")?;
    let sym = symmetrize(&self_product_minus_diagonal(&f)?)?;
    let source_norm = norm(&d, Covering::Spectral(&f))?;
    let pushed = correspondence_push(&d, &f)?;
    let target_norm = norm(&pushed, Covering::SigmaQuotient(&sym))?;
    let report = json!({
        "push": divisor_to_json(&pushed),
        "source_norm": divisor_to_json(&source_norm),
        "target_norm": divisor_to_json(&target_norm),
        "source_in_prym": source_norm.is_zero(),
        "target_in_prym": target_norm.is_zero(),
    });
    let preserved = !source_norm.is_zero() || target_norm.is_zero();
    Ok(with_checks(report, &[("correspondence preserves Prym divisors", preserved)]))
}

fn pair_json(p: ToledoPair) -> Value {
    json!([p.first, p.second])
}

pub fn invariants_map(input: &Value) -> Result<Outcome> {
    let d = pair(input, "d")?;
    Ok(Outcome::Ok(json!({"d": pair_json(d), "c": pair_json(toledo_map(d))})))
}

fn toledo_group(input: &Value) -> Result<ToledoGroup> {
    match string(input, "group")? {
        "sl2_pair" => Ok(ToledoGroup::Sl2Pair),
        "so022" => Ok(ToledoGroup::So022),
        other => Err(Error::validation(format!("at group: expected \"sl2_pair\" or \"so022\", got {other:?}"))),
    }
}

pub fn invariants_mw(input: &Value) -> Result<Outcome> {
    let p = pair(input, "pair")?;
    let group = toledo_group(input)?;
    let g = genus(input)?;
    let bound = match group {
        ToledoGroup::Sl2Pair => i64::from(g.get()) - 1,
        ToledoGroup::So022 => 2 * i64::from(g.get()) - 2,
    };
    Ok(Outcome::Ok(json!({
        "pair": pair_json(p),
        "genus": g.get(),
        "bound": bound,
        "within_bounds": milnor_wood_check(p, group, g),
    })))
}

pub fn invariants_lift(input: &Value) -> Result<Outcome> {
    let query = match string(input, "group")? {
        "so022" => LiftQuery::So022 { c: pair(input, "c")?, genus: genus(input)? },
        "so033" => {
            let w = pair(input, "w2")?;
            let label = |x: i64, i: usize| {
                u8::try_from(x)
                    .map_err(|_| Error::validation(format!("at w2[{i}]: expected 0 or 1")))
                    .and_then(W2Label::new)
            };
            LiftQuery::So033 { b1: label(w.first, 0)?, b2: label(w.second, 1)? }
        }
        other => return Err(Error::validation(format!("at group: expected \"so022\" or \"so033\", got {other:?}"))),
    };
    Ok(Outcome::Ok(json!({"liftable": liftable(query)})))
}

pub fn invariants_count(input: &Value) -> Result<Outcome> {
    let isogeny = match string(input, "isogeny")? {
        "I2" | "i2" => Isogeny::I2,
        "I3" | "i3" => Isogeny::I3,
        other => return Err(Error::validation(format!("at isogeny: expected \"I2\" or \"I3\", got {other:?}"))),
    };
    let c = preimage_count(isogeny, genus(input)?);
    Ok(Outcome::Ok(json!({
        "isogeny": format!("{:?}", c.isogeny),
        "genus": c.genus,
        "stated": c.stated,
        "quoted_solutions": c.quoted_solutions,
        "enumerated": c.enumerated,
    })))
}

pub fn invariants_census(input: &Value) -> Result<Outcome> {
    let group = match string(input, "group")? {
        "so033" => CensusGroup::So033,
        "so022" => CensusGroup::So022,
        other => return Err(Error::validation(format!("at group: expected \"so033\" or \"so022\", got {other:?}"))),
    };
    let labels = |ls: &[(W2Label, W2Label)]| -> Value { ls.iter().map(|(a, b)| json!([a.get(), b.get()])).collect() };
    Ok(Outcome::Ok(match component_census(group, genus(input)?) {
        Census::So033(c) => json!({
            "group": "so033",
            "labels": labels(&c.labels),
            "image_labels": labels(&c.image_labels),
            "hitchin_source": c.hitchin_source,
            "hitchin_target": c.hitchin_target,
            "total_components": c.total_components,
        }),
        Census::So022(c) => json!({
            "group": "so022",
            "genus": c.genus,
            "classes_hit": c.classes_hit.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "bounded_pairs": c.bounded_pairs,
            "parity_matched": c.parity_matched,
            "images_of_bounded_d": c.images_of_bounded_d,
            "parity_matched_unbounded_d": c.parity_matched_unbounded_d,
        }),
    }))
}

pub fn higgs_assemble_so22(input: &Value, orientation: Sign) -> Result<Outcome> {
    let n = pair(input, "n_degrees")?;
    let two = |key: &str| -> Result<[isolab::QPoly; 2]> {
        let arr = field(input, key, "")?
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::validation(format!("at {key}: expected two polynomials")))?;
        Ok([poly_from_json(&arr[0], &format!("{key}[0]"))?, poly_from_json(&arr[1], &format!("{key}[1]"))?])
    };
    let (beta, gamma) = (two("beta")?, two("gamma")?);
    let asm = assemble_so22(n, [&beta[0], &beta[1]], [&gamma[0], &gamma[1]], orientation)?;
    let expected = so4_base(
        &BaseSL2Pair::new(-(&beta[0] * &gamma[0]), -(&beta[1] * &gamma[1])),
        so4_sign(orientation),
    );
    let quartic = asm.field.char_poly()?;
    let report = json!({
        "orientation": sign_json(orientation),
        "phi": poly_matrix_to_json(asm.field.phi()),
        "alpha": poly_matrix_to_json(&asm.field.upper_right()),
        "m_degrees": pair_json(asm.m_degrees),
        "b1": poly_to_json(&asm.base.b1),
        "pf": poly_to_json(&asm.base.pf),
        "quartic": curve_to_json(&quartic),
    });
    Ok(with_checks(report, &[("char poly equals the SO(4) base quartic", quartic == expected.quartic())]))
}
