use lieembed::exactlin::{format_rational, ExactScalar};
use lieembed::liecore::{Element, LieAlgebra, Subspace};
use lieembed::rootsys::Root;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub fn elements(l: &LieAlgebra, v: &[Element]) -> Vec<String> {
    v.iter().map(|e| l.format_element(e)).collect()
}

pub fn space(l: &LieAlgebra, s: &Subspace) -> Vec<String> {
    elements(l, s.basis())
}

/// `<a, b, c>` over the echelon basis.
pub fn angle(l: &LieAlgebra, s: &Subspace) -> String {
    format!("<{}>", space(l, s).join(", "))
}

fn signed_term(x: &ExactScalar) -> (bool, String) {
    if x.is_rational() {
        let c = x.a();
        let body = if c.abs().is_one() { String::new() } else { format!("{}*", format_rational(&c.abs())) };
        return (c.is_negative(), body);
    }
    if x.a().is_zero() {
        let s = x.to_string();
        return match s.strip_prefix('-') {
            Some(rest) => (true, format!("{rest}*")),
            None => (false, format!("{s}*")),
        };
    }
    (false, format!("({x})*"))
}

/// Vector with coefficients in `Q(sqrt(d))` written over the basis names;
/// mixed coefficients go in parentheses.
pub fn exact_element(l: &LieAlgebra, v: &[ExactScalar]) -> String {
    let mut out = String::new();
    for (x, name) in v.iter().zip(l.names()) {
        if x.is_zero() {
            continue;
        }
        let (neg, coeff) = signed_term(x);
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&coeff);
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn root_label(r: &[ExactScalar]) -> String {
    format!("({})", r.iter().map(ExactScalar::to_string).collect::<Vec<_>>().join(", "))
}

pub fn root(r: &Root) -> Value {
    json!({ "values": r, "label": root_label(r) })
}

pub fn labels(rs: &[Root]) -> Vec<String> {
    rs.iter().map(|r| root_label(r)).collect()
}
