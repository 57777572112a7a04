//! Text, LaTeX and JSON renderings of the library types.

use serde_json::{json, Map, Value};
use ssym_harmonic::{Partition, QMForm, QSeries, Rational, SSPoly};

pub fn rational(c: &Rational) -> Value {
    Value::String(c.to_string())
}

pub fn partition(l: &Partition) -> Value {
    json!(l.parts())
}

/// `[{"coeff": "27/4", "monomial": {"2": 2}}, ...]`; half-integer exponents
/// are written as strings such as `"3/2"`.
pub fn poly(f: &SSPoly) -> Value {
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| a.0.cmp(b.0)));
    Value::Array(
        terms
            .into_iter()
            .map(|(m, c)| {
                let mut mono = Map::new();
                for &(k, d) in m.doubled_powers() {
                    let e = if d % 2 == 0 { json!(d / 2) } else { json!(format!("{d}/2")) };
                    mono.insert(k.to_string(), e);
                }
                json!({ "coeff": c.to_string(), "monomial": mono })
            })
            .collect(),
    )
}

/// `[{"coeff": "9/320", "P": 0, "Q": 1, "R": 0}, ...]`.
pub fn form(m: &QMForm) -> Value {
    Value::Array(
        m.terms()
            .map(|(&(a, b, c), coeff)| json!({ "coeff": coeff.to_string(), "P": a, "Q": b, "R": c }))
            .collect(),
    )
}

pub fn series(s: &QSeries) -> Value {
    Value::Array(s.coeffs().iter().map(rational).collect())
}
