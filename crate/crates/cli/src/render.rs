//! Text, JSON and LaTeX forms of the library's results.

use serde_json::{json, Map, Value};
use superschur::{Basis, Coefficient, SuperPartition, SymSuperFunc};

pub fn latex_basis(b: Basis) -> &'static str {
    match b {
        Basis::M => "m",
        Basis::P => "p",
        Basis::E => "e",
        Basis::H => "h",
        Basis::S => "s",
        Basis::SBar => "\\bar{s}",
        Basis::SStar => "s^*",
        Basis::SBarStar => "\\bar{s}^*",
    }
}

/// Terms largest first.
fn terms(f: &SymSuperFunc) -> Vec<(&SuperPartition, &Coefficient)> {
    f.terms().collect()
}

pub fn join_signed(items: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in items.enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn plain_func(f: &SymSuperFunc) -> String {
    join_signed(terms(f).into_iter().map(|(k, c)| {
        let abs = c.abs();
        let coef = if abs.is_one() { String::new() } else { format!("{abs}*") };
        (c.is_negative(), format!("{coef}{}{k}", f.basis()))
    }))
}

pub fn latex_func(f: &SymSuperFunc) -> String {
    join_signed(terms(f).into_iter().map(|(k, c)| {
        let abs = c.abs();
        let coef = if abs.is_one() {
            String::new()
        } else if abs.is_integer() {
            format!("{abs}\\,")
        } else {
            let (n, d) =
                abs.to_string().split_once('/').map(|(a, b)| (a.to_string(), b.to_string())).unwrap_or_default();
            format!("\\frac{{{n}}}{{{d}}}\\,")
        };
        (c.is_negative(), format!("{coef}{}_{{{}}}", latex_basis(f.basis()), latex_sp(k)))
    }))
}

pub fn latex_sp(l: &SuperPartition) -> String {
    let (a, s) = l.to_text().split_once(';').map(|(a, s)| (a.to_string(), s.to_string())).expect("text form has ';'");
    let a = if a.is_empty() { "\\emptyset".to_string() } else { a };
    let s = if s.is_empty() { "\\emptyset".to_string() } else { s };
    format!("({a};{s})")
}

/// `{"a;s": coefficient, …}`, keys in the text form the parser accepts.
pub fn json_func(f: &SymSuperFunc) -> Value {
    let mut map = Map::new();
    for (k, c) in terms(f) {
        map.insert(k.to_text(), serde_json::to_value(c).expect("coefficients serialize"));
    }
    Value::Object(map)
}

pub fn json_sp(l: &SuperPartition) -> Value {
    json!(l.to_text())
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}
