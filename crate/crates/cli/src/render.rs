//! Text and LaTeX renderings of table entries.

use num_traits::{One, Signed, Zero};
use qeuler::exactq::{BigRat, QPoly, QRatFn, XPoly};

/// `num` alone for polynomials, `(num)/(den)` otherwise.
pub fn ratfn_text(f: &QRatFn) -> String {
    if f.is_polynomial() {
        f.num().to_string()
    } else {
        f.to_string()
    }
}

pub fn xpoly_text(p: &XPoly<QRatFn>) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let c = ratfn_text(c);
            let c = if c.contains(' ') && !c.starts_with('(') {
                format!("({c})")
            } else {
                c
            };
            match k {
                0 => c,
                1 => format!("{c}·x"),
                _ => format!("{c}·x^{k}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn rational_latex(c: &BigRat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn monomial_latex(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_owned(),
        _ => format!("{var}^{{{k}}}"),
    }
}

pub fn qpoly_latex(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if k == 0 || !mag.is_one() {
            out.push_str(&rational_latex(&mag));
        }
        out.push_str(&monomial_latex("q", k));
    }
    out
}

pub fn ratfn_latex(f: &QRatFn) -> String {
    if f.is_polynomial() {
        qpoly_latex(f.num())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            qpoly_latex(f.num()),
            qpoly_latex(f.den())
        )
    }
}

pub fn xpoly_latex(p: &XPoly<QRatFn>) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            if k > 0 && c.is_one() {
                return monomial_latex("x", k);
            }
            if k > 0 && (-c).is_one() {
                return format!("-{}", monomial_latex("x", k));
            }
            let body = ratfn_latex(c);
            let body = if k > 0
                && c.is_polynomial()
                && c.num().coeffs().iter().filter(|v| !v.is_zero()).count() > 1
            {
                format!("\\left({body}\\right)")
            } else {
                body
            };
            format!("{body}{}", monomial_latex("x", k))
        })
        .collect();
    terms.join(" + ")
}

/// Braces balance and never close before they open.
pub fn braces_balanced(s: &str) -> bool {
    let mut depth: i64 = 0;
    for ch in s.chars() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}
