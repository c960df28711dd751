//! Deciding whether an operator kills the hypergeometric series.
//!
//! After left-clearing, write `D = Σ_j Σ_m p_{j,m} z^m X_j`. The coefficient
//! of `z^n` in `D φ` equals `c_n F(q^n)`, where `c_n` is the `n`-th series
//! coefficient and `F(Q)` is a rational function in `Q` (and `a, b, c, q`):
//! every ratio `X_j(c_{n-m}) / c_n` is a finite product of binomials in
//! `q^n`. When `F` is identically zero, all orders vanish at once; otherwise
//! `F(q^n)` is checked for `n = 0..K`.

use crate::contiguous::series::{FormalSeries, SeriesCoeff};
use crate::diffop::{apply_to_series, DiffOperator};
use crate::error::Result;
use crate::exactalg::{LaurentPoly, Monomial, Rational, Var};

/// Outcome of [`verify_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// All coefficients through the requested order vanish.
    pub passed: bool,
    /// The closed form in `q^n` vanishes identically, so every order does.
    pub all_orders: bool,
    /// Lowest order with a nonzero coefficient, if one was found within `K`.
    pub first_nonzero: Option<usize>,
}

// The variable `z` stands in for `Q = q^n` inside the closed form.
fn binomial(x: Monomial, with_q_n: bool, qe: i32) -> LaurentPoly {
    let mut m = x * Monomial::var_pow(Var::Q, qe);
    if with_q_n {
        m = m * Monomial::var(Var::Z);
    }
    LaurentPoly::from_terms([(Monomial::ONE, Rational::ONE), (m, -Rational::ONE)])
}

/// `(x;q)_{n-m+k} / ((x;q)_k (x;q)_n)` raised to `sign`.
fn shifted_ratio(acc: SeriesCoeff, x: Var, k: i32, m: i32, sign: i32) -> SeriesCoeff {
    let xm = Monomial::var(x);
    let mut acc = acc;
    let d = k - m;
    if d >= 0 {
        for i in 0..d {
            acc = acc.with_factor(&binomial(xm, true, i), sign).unwrap();
        }
    } else {
        for i in 1..=-d {
            acc = acc.with_factor(&binomial(xm, true, -i), -sign).unwrap();
        }
    }
    if k >= 0 {
        for i in 0..k {
            acc = acc.with_factor(&binomial(xm, false, i), -sign).unwrap();
        }
    } else {
        for i in 1..=-k {
            acc = acc.with_factor(&binomial(xm, false, -i), sign).unwrap();
        }
    }
    acc
}

/// `F(Q)` for a left-cleared operator.
pub(crate) fn closed_form(cleared: &DiffOperator) -> SeriesCoeff {
    let mut parts = Vec::new();
    for (x, r) in cleared.terms() {
        let [ka, kb, kc, kz] = x.0;
        let (off, coeffs) = r.num().to_univariate(Var::Z);
        debug_assert!(off >= 0);
        for (i, p) in coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let m = off + i as i32;
            let mono = Monomial::var_pow(Var::Z, kz) * Monomial::var_pow(Var::Q, -kz * m);
            let mut t = SeriesCoeff::from_poly(p.mul_monomial(&mono));
            for i in 0..m {
                t = t.with_factor(&binomial(Monomial::ONE, true, -i), 1).unwrap();
            }
            t = shifted_ratio(t, Var::A, ka, m, 1);
            t = shifted_ratio(t, Var::B, kb, m, 1);
            t = shifted_ratio(t, Var::C, kc, m, -1);
            parts.push(t);
        }
    }
    SeriesCoeff::sum(&parts)
}

/// Full report on `D φ` through order `k`.
pub fn verify_report(d: &DiffOperator, k: usize) -> Result<Verification> {
    if d.is_zero() {
        return Ok(Verification { passed: true, all_orders: true, first_nonzero: None });
    }
    let (_, cleared) = d.left_clear();
    let f = closed_form(&cleared);
    if f.is_zero() {
        return Ok(Verification { passed: true, all_orders: true, first_nonzero: None });
    }
    for n in 0..=k {
        let at = f.substitute_monomial(Var::Z, Monomial::var_pow(Var::Q, n as i32))?;
        if !at.is_zero() {
            return Ok(Verification { passed: false, all_orders: false, first_nonzero: Some(n) });
        }
    }
    Ok(Verification { passed: true, all_orders: false, first_nonzero: None })
}

/// True iff the coefficients of `z^0..z^k` of `D φ` all vanish, after
/// left-clearing `D`.
pub fn verify_annihilates(d: &DiffOperator, k: usize) -> Result<bool> {
    Ok(verify_report(d, k)?.passed)
}

/// The same question answered by expanding `D φ` term by term.
pub fn verify_by_expansion(d: &DiffOperator, k: usize) -> Result<bool> {
    let (_, cleared) = d.left_clear();
    let s = apply_to_series(&cleared, &FormalSeries::phi21(k), k)?;
    Ok(s.is_zero())
}
