//! JSON and table rendering. JSON objects use sorted keys and floats carry 12
//! significant digits, so equal inputs give byte-identical output.

use conjlab_core::{Bounded, Group, GroupRingVector, Rational};
use serde_json::{json, Value};

/// Round to 12 significant digits. Non-finite values become strings.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        });
    }
    if x == 0.0 {
        return json!(0.0);
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(rounded)
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn bounded(b: Bounded) -> Value {
    match b {
        Bounded::Exact(v) => json!(v),
        Bounded::AtLeast(v) => Value::String(format!("≥{v}")),
    }
}

/// `[[element, re, im], ...]` sorted by encoding.
pub fn vector<G: Group>(group: &G, v: &GroupRingVector<G::Element>) -> Value {
    let mut rows: Vec<(String, String, String)> = v
        .iter()
        .map(|(g, c)| (group.encode(g), c.re.to_string(), c.im.to_string()))
        .collect();
    rows.sort();
    Value::Array(
        rows.into_iter()
            .map(|(g, re, im)| json!([g, re, im]))
            .collect(),
    )
}

pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Plain aligned table; the first row is the header.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:<w$}", w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Key/value listing for scalar reports.
pub fn pairs(rows: &[(&str, String)]) -> String {
    let owned: Vec<Vec<String>> = rows
        .iter()
        .map(|(k, v)| vec![(*k).to_string(), v.clone()])
        .collect();
    table(&owned)
}

pub fn float_text(x: f64) -> String {
    match float(x) {
        Value::String(s) => s,
        v => v.to_string(),
    }
}
