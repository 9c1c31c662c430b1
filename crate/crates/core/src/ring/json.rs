//! `{"var":"q","order":N,"coeffs":[...]}` with rationals as `["num","den"]`
//! decimal strings and polynomials as `[{"coef":[..],"exps":[..]}]`.

use super::{Coeff, MPoly, Monomial, QSeries, Rational, RingError, SymbolTable};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::str::FromStr;

fn bad(msg: impl Into<String>) -> RingError {
    RingError::Json(msg.into())
}

pub fn rational_to_json(r: &Rational) -> Value {
    json!([r.numer().to_string(), r.denom().to_string()])
}

pub fn rational_from_json(v: &Value) -> Result<Rational, RingError> {
    let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("rational must be a [num, den] pair"))?;
    let part = |x: &Value| -> Result<BigInt, RingError> {
        let s = x.as_str().ok_or_else(|| bad("rational parts must be strings"))?;
        BigInt::from_str(s).map_err(|_| bad(format!("not an integer: {s:?}")))
    };
    let (n, d) = (part(&arr[0])?, part(&arr[1])?);
    if d == BigInt::from(0) {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn mpoly_to_json(p: &MPoly, table: &SymbolTable) -> Value {
    Value::Array(
        p.terms().rev().map(|(m, c)| json!({"coef": rational_to_json(c), "exps": m.to_dense(table.len())})).collect(),
    )
}

fn mpoly_from_json(v: &Value, table: &SymbolTable) -> Result<MPoly, RingError> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial must be an array of terms"))?;
    let mut p = MPoly::default();
    for t in arr {
        let c = rational_from_json(t.get("coef").ok_or_else(|| bad("term without coef"))?)?;
        let exps = t
            .get("exps")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term without exps"))?
            .iter()
            .map(|e| e.as_u64().map(|x| x as u32).ok_or_else(|| bad("exponent must be a nonnegative integer")))
            .collect::<Result<Vec<u32>, _>>()?;
        if exps.len() != table.len() {
            return Err(bad(format!("exps has length {}, symbol table has {}", exps.len(), table.len())));
        }
        p.add_term(Monomial::from_dense(&exps), c);
    }
    Ok(p)
}

fn envelope<C: Coeff>(s: &QSeries<C>, f: impl Fn(&C) -> Value) -> String {
    let v = json!({
        "var": "q",
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(f).collect::<Vec<_>>(),
    });
    v.to_string()
}

fn open(text: &str) -> Result<(usize, Vec<Value>), RingError> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if v.get("var").and_then(Value::as_str) != Some("q") {
        return Err(bad("var must be \"q\""));
    }
    let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| bad("missing order"))? as usize;
    let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("missing coeffs"))?.clone();
    if coeffs.len() != order + 1 {
        return Err(bad(format!("order {order} needs {} coefficients, found {}", order + 1, coeffs.len())));
    }
    Ok((order, coeffs))
}

pub fn series_to_json(s: &QSeries<Rational>) -> String {
    envelope(s, rational_to_json)
}

pub fn series_from_json(text: &str) -> Result<QSeries<Rational>, RingError> {
    let (_, coeffs) = open(text)?;
    Ok(QSeries::from_coeffs(coeffs.iter().map(rational_from_json).collect::<Result<_, _>>()?))
}

/// Exponent vectors are written densely against `table`.
pub fn mpoly_series_to_json(s: &QSeries<MPoly>, table: &SymbolTable) -> String {
    envelope(s, |c| mpoly_to_json(c, table))
}

pub fn mpoly_series_from_json(text: &str, table: &SymbolTable) -> Result<QSeries<MPoly>, RingError> {
    let (_, coeffs) = open(text)?;
    Ok(QSeries::from_coeffs(coeffs.iter().map(|c| mpoly_from_json(c, table)).collect::<Result<_, _>>()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn exact_format() {
        let s = QSeries::from_coeffs(vec![int(0), rat(-7, 2)]);
        assert_eq!(series_to_json(&s), r#"{"coeffs":[["0","1"],["-7","2"]],"order":1,"var":"q"}"#);
        assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn polynomial_coefficients() {
        let t = SymbolTable::new(&["chi", "K2"]);
        let c = MPoly::var(0).scale(&rat(5, 4)).add_ref(&MPoly::var(1).mul_ref(&MPoly::var(1)));
        let s = QSeries::from_coeffs(vec![MPoly::default(), c]);
        let text = mpoly_series_to_json(&s, &t);
        assert!(text.contains(r#"{"coef":["1","1"],"exps":[0,2]}"#));
        assert_eq!(mpoly_series_from_json(&text, &t).unwrap(), s);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(series_from_json(r#"{"var":"q","order":2,"coeffs":[["1","1"]]}"#).is_err());
        assert!(series_from_json(r#"{"var":"q","order":0,"coeffs":[["1","0"]]}"#).is_err());
        assert!(series_from_json(r#"{"var":"t","order":0,"coeffs":[["1","1"]]}"#).is_err());
    }
}
