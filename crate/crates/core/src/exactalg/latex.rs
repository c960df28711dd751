//! LaTeX rendering of polynomials and rational functions.

use super::monomial::{Monomial, Var};
use super::poly::LaurentPoly;
use super::ratfunc::RationalFunc;
use super::rational::Rational;

fn monomial_latex(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{{{}}}", v.name(), e)),
        }
    }
    parts.join(" ")
}

fn rational_latex(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn poly_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.signum() < 0;
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&rational_latex(&a));
        } else if a.is_one() {
            out.push_str(&monomial_latex(m));
        } else {
            out.push_str(&rational_latex(&a));
            out.push(' ');
            out.push_str(&monomial_latex(m));
        }
    }
    out
}

pub fn rf_latex(f: &RationalFunc) -> String {
    if f.is_poly() {
        poly_latex(f.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_latex(f.num()), poly_latex(f.den()))
    }
}
