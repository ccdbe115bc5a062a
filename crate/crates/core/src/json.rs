//! JSON encoding of the library's values.
//!
//! Rationals are strings `"p/q"` (integers may also be given as JSON numbers
//! on input). A polynomial is an array of coefficients, lowest degree first;
//! a constant polynomial is written as a bare scalar, and either form is
//! accepted on input. Matrices are arrays of rows, divisors are objects
//! `{label: weight}`, fibers are `{base_label, kind?, points: [{label, mult}]}`.
//!
//! Decoding errors are validation errors prefixed with the field path of the
//! offending value, e.g. `a2[1]`.

use serde_json::{json, Map, Value};

use crate::algebra::{parse_rational, rational_to_string, Matrix, Poly};
use crate::covers::{Divisor, FiberKind, FiberModel, FiberPoint};
use crate::error::{Error, Result};
use crate::{CurvePoly, PolyMatrix, QMatrix, QPoly, Rational};

fn at(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::validation(format!("at {path}: {msg}"))
}

fn index_path(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

fn key_path(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

pub fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    let obj = v.as_object().ok_or_else(|| at(if path.is_empty() { "<root>" } else { path }, "expected an object"))?;
    obj.get(key).ok_or_else(|| at(&key_path(path, key), "missing field"))
}

pub fn opt_field<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.as_object().and_then(|o| o.get(key)).filter(|x| !x.is_null())
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| at(path, "expected an array"))
}

pub fn rational_to_json(x: &Rational) -> Value {
    Value::String(rational_to_string(x))
}

pub fn rational_from_json(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|_| at(path, format!("malformed rational {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(crate::rat(n.as_i64().unwrap())),
        _ => Err(at(path, "expected a rational string \"p/q\" or an integer")),
    }
}

pub fn int_from_json(v: &Value, path: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| at(path, "expected an integer"))
}

pub fn poly_to_json(p: &QPoly) -> Value {
    match p.degree() {
        None => json!("0"),
        Some(0) => rational_to_json(&p.coeffs()[0]),
        Some(_) => Value::Array(p.coeffs().iter().map(rational_to_json).collect()),
    }
}

pub fn poly_from_json(v: &Value, path: &str) -> Result<QPoly> {
    match v {
        Value::Array(items) => Ok(Poly::new(
            items.iter().enumerate().map(|(i, x)| rational_from_json(x, &index_path(path, i))).collect::<Result<_>>()?,
        )),
        _ => Ok(QPoly::constant(rational_from_json(v, path)?)),
    }
}

/// A polynomial in `η`: array of `z`-polynomials, lowest `η` degree first.
pub fn curve_to_json(p: &CurvePoly) -> Value {
    Value::Array(p.coeffs().iter().map(poly_to_json).collect())
}

pub fn curve_from_json(v: &Value, path: &str) -> Result<CurvePoly> {
    Ok(Poly::new(
        array(v, path)?.iter().enumerate().map(|(i, x)| poly_from_json(x, &index_path(path, i))).collect::<Result<_>>()?,
    ))
}

pub fn matrix_to_json<R: crate::Ring>(m: &Matrix<R>, entry: impl Fn(&R) -> Value) -> Value {
    Value::Array(m.to_rows().iter().map(|row| Value::Array(row.iter().map(&entry).collect())).collect())
}

fn matrix_from_json<R>(v: &Value, path: &str, entry: impl Fn(&Value, &str) -> Result<R>) -> Result<Matrix<R>>
where
    R: crate::Ring,
{
    let rows = array(v, path)?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let rp = index_path(path, i);
        let cells = array(row, &rp)?;
        out.push(cells.iter().enumerate().map(|(j, x)| entry(x, &index_path(&rp, j))).collect::<Result<Vec<R>>>()?);
    }
    Matrix::from_rows(out).map_err(|e| at(path, e))
}

pub fn qmatrix_from_json(v: &Value, path: &str) -> Result<QMatrix> {
    matrix_from_json(v, path, rational_from_json)
}

pub fn poly_matrix_from_json(v: &Value, path: &str) -> Result<PolyMatrix> {
    matrix_from_json(v, path, poly_from_json)
}

pub fn qmatrix_to_json(m: &QMatrix) -> Value {
    matrix_to_json(m, rational_to_json)
}

pub fn poly_matrix_to_json(m: &PolyMatrix) -> Value {
    matrix_to_json(m, poly_to_json)
}

pub fn divisor_to_json(d: &Divisor) -> Value {
    Value::Object(d.weights().iter().map(|(k, w)| (k.clone(), json!(w))).collect::<Map<_, _>>())
}

pub fn divisor_from_json(v: &Value, path: &str) -> Result<Divisor> {
    let obj = v.as_object().ok_or_else(|| at(path, "expected an object {label: weight}"))?;
    let mut d = Divisor::new();
    for (label, w) in obj {
        d.add_weight(label.clone(), int_from_json(w, &key_path(path, label))?);
    }
    Ok(d)
}

pub fn fiber_kind_name(kind: FiberKind) -> &'static str {
    match kind {
        FiberKind::Regular => "regular",
        FiberKind::GenericBranch => "generic_branch",
    }
}

pub fn fiber_kind_from_json(v: &Value, path: &str) -> Result<FiberKind> {
    match v.as_str() {
        Some("regular") => Ok(FiberKind::Regular),
        Some("generic_branch") => Ok(FiberKind::GenericBranch),
        _ => Err(at(path, "expected \"regular\" or \"generic_branch\"")),
    }
}

pub fn fiber_to_json(f: &FiberModel) -> Value {
    let kind = f.kind().map(|k| json!(fiber_kind_name(k))).unwrap_or(Value::Null);
    json!({
        "base_label": f.base_label(),
        "kind": kind,
        "points": f.points().iter().map(|p| json!({"label": p.label, "mult": p.mult})).collect::<Vec<_>>(),
    })
}

/// Decodes a fiber; a `kind` field, when present, must agree with the
/// ramification profile of the points.
pub fn fiber_from_json(v: &Value, path: &str) -> Result<FiberModel> {
    let base_label = field(v, "base_label", path)?
        .as_str()
        .ok_or_else(|| at(&key_path(path, "base_label"), "expected a string"))?;
    let pp = key_path(path, "points");
    let mut points = Vec::new();
    for (i, p) in array(field(v, "points", path)?, &pp)?.iter().enumerate() {
        let ip = index_path(&pp, i);
        let label = field(p, "label", &ip)?
            .as_str()
            .ok_or_else(|| at(&key_path(&ip, "label"), "expected a string"))?
            .to_string();
        let mult = match opt_field(p, "mult") {
            None => 1,
            Some(m) => u32::try_from(int_from_json(m, &key_path(&ip, "mult"))?)
                .map_err(|_| at(&key_path(&ip, "mult"), "multiplicity out of range"))?,
        };
        points.push(FiberPoint { label, mult });
    }
    let fiber = FiberModel::new(base_label, points).map_err(|e| at(path, e))?;
    if let Some(k) = opt_field(v, "kind") {
        let declared = fiber_kind_from_json(k, &key_path(path, "kind"))?;
        let actual = fiber.kind().map_err(|e| at(path, e))?;
        if declared != actual {
            return Err(at(&key_path(path, "kind"), format!("declared {:?} but the points have profile {:?}", declared, actual)));
        }
    }
    Ok(fiber)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat};

    #[test]
    fn poly_round_trip() {
        let p = Poly::new(vec![rat(1), frac(-2, 3), rat(5)]);
        assert_eq!(poly_to_json(&p), json!(["1", "-2/3", "5"]));
        assert_eq!(poly_from_json(&poly_to_json(&p), "p").unwrap(), p);
        assert_eq!(poly_to_json(&QPoly::constant(rat(-10))), json!("-10"));
        assert_eq!(poly_to_json(&QPoly::new(vec![])), json!("0"));
        assert_eq!(poly_from_json(&json!(7), "p").unwrap(), QPoly::constant(rat(7)));
        assert_eq!(poly_from_json(&json!(["0", "0"]), "p").unwrap(), QPoly::new(vec![]));
    }

    #[test]
    fn errors_carry_paths() {
        let err = poly_from_json(&json!(["1", "x/2"]), "a2").unwrap_err();
        assert!(err.to_string().contains("a2[1]"), "{err}");
        let err = qmatrix_from_json(&json!([["1", "2"], ["3"]]), "m").unwrap_err();
        assert!(err.is_validation());
        let err = field(&json!({"a": 1}), "b", "input").unwrap_err();
        assert!(err.to_string().contains("input.b"), "{err}");
    }

    #[test]
    fn fiber_and_divisor() {
        let v = json!({"base_label": "x", "kind": "generic_branch", "points": [{"label": "y1", "mult": 2}, {"label": "y2"}, {"label": "y3"}]});
        let f = fiber_from_json(&v, "fiber").unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(fiber_to_json(&f)["kind"], json!("generic_branch"));
        let bad = json!({"base_label": "x", "kind": "regular", "points": [{"label": "y1", "mult": 2}, {"label": "y2"}]});
        assert!(fiber_from_json(&bad, "fiber").unwrap_err().to_string().contains("fiber.kind"));
        let d = divisor_from_json(&json!({"y1": 2, "y2": -1, "y3": 0}), "d").unwrap();
        assert_eq!(divisor_to_json(&d), json!({"y1": 2, "y2": -1}));
    }
}
