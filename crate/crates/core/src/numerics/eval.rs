//! Evaluation of q-Pochhammer symbols, theta functions, terms and the
//! basic hypergeometric series.

use serde::{Deserialize, Serialize};

use super::complex::Complex;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Monomial, RationalFunc, Var};
use crate::paramgroup::{ParamMatrix, ShiftOp};
use crate::qterm::QHypTerm;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Significand bits.
    pub precision: usize,
    /// Relative tolerance for comparisons.
    pub tol: f64,
    /// Relative size below which tails of products and sums are dropped.
    pub tail_eps: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self { precision: 128, tol: 1e-10, tail_eps: 1e-30 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || !(self.tail_eps < self.tol) || self.precision < 64 {
            return Err(Error::Domain(format!("inconsistent evaluation settings {self:?}")));
        }
        Ok(())
    }
}

/// Values of `(a, b, c, z, q)`.
#[derive(Clone, Debug)]
pub struct EvalPoint {
    pub vals: [Complex; 5],
}

impl EvalPoint {
    pub fn new(vals: [Complex; 5]) -> Self {
        Self { vals }
    }

    pub fn from_f64(vals: [(f64, f64); 5], p: usize) -> Self {
        Self { vals: vals.map(|(re, im)| Complex::from_f64(re, im, p)) }
    }

    pub fn get(&self, v: Var) -> &Complex {
        &self.vals[v.index()]
    }

    pub fn with(&self, v: Var, x: Complex) -> Self {
        let mut out = self.clone();
        out.vals[v.index()] = x;
        out
    }

    pub fn eval_monomial(&self, m: &Monomial) -> Complex {
        let p = self.vals[0].precision();
        let mut acc = Complex::one(p);
        for v in Var::ALL {
            let e = m.exp(v);
            if e != 0 {
                acc = &acc * &self.get(v).powi(e);
            }
        }
        acc
    }

    pub fn eval_poly(&self, f: &LaurentPoly) -> Complex {
        let p = self.vals[0].precision();
        let mut acc = Complex::zero(p);
        for (m, c) in f.terms() {
            acc = &acc + &(&Complex::from_rational(c, p) * &self.eval_monomial(m));
        }
        acc
    }

    pub fn eval_rf(&self, f: &RationalFunc) -> Result<Complex> {
        let d = self.eval_poly(f.den());
        if d.is_zero() {
            return Err(Error::Domain(format!("denominator of {f} vanishes")));
        }
        Ok(&self.eval_poly(f.num()) / &d)
    }

    /// `x ↦ x q^{k_x}`.
    pub fn shifted(&self, s: &ShiftOp) -> Self {
        let mut out = self.clone();
        for (i, k) in s.0.iter().enumerate() {
            if *k != 0 {
                out.vals[i] = &self.vals[i] * &self.vals[4].powi(*k);
            }
        }
        out
    }

    /// The point at which `f ∘ L^{-1}` evaluates `f`.
    pub fn transformed(&self, l: &ParamMatrix) -> Self {
        let images = l.inverse().variable_images();
        Self { vals: images.map(|m| self.eval_monomial(&m)) }
    }
}

/// `(x; q)_∞`, truncated once `|x q^j| < tail_eps (1 - |q|)`.
pub fn qpoch_inf(x: &Complex, q: &Complex, cfg: &EvalConfig) -> Result<Complex> {
    let aq = q.abs_f64();
    if aq >= 1.0 {
        return Err(Error::Domain(format!("|q| = {aq} is not below 1")));
    }
    let p = cfg.precision;
    let one = Complex::one(p);
    let mut prod = one.clone();
    let mut t = x.clone();
    let cut = cfg.tail_eps * (1.0 - aq);
    while !t.is_zero() && t.abs_f64() >= cut {
        prod = &prod * &(&one - &t);
        t = &t * q;
    }
    Ok(prod)
}

/// `θ(x; q) = (x, q/x; q)_∞`.
pub fn theta(x: &Complex, q: &Complex, cfg: &EvalConfig) -> Result<Complex> {
    if x.is_zero() {
        return Err(Error::Domain("theta function at 0".into()));
    }
    Ok(&qpoch_inf(x, q, cfg)? * &qpoch_inf(&(q / x), q, cfg)?)
}

/// The series `Σ (a,b;q)_k / (q,c;q)_k z^k` for `|z| < 1`.
///
/// Summation stops once a geometric bound on the remaining tail, valid from
/// the current index on, falls below `tail_eps` times the partial sum.
pub fn phi21(pt: &EvalPoint, cfg: &EvalConfig) -> Result<Complex> {
    let p = cfg.precision;
    let [a, b, c, z, q] = &pt.vals;
    let (az, aq) = (z.abs_f64(), q.abs_f64());
    if az >= 1.0 {
        return Err(Error::Domain(format!("|z| = {az} is not below 1")));
    }
    if aq >= 1.0 {
        return Err(Error::Domain(format!("|q| = {aq} is not below 1")));
    }
    let (na, nb, nc) = (a.abs_f64(), b.abs_f64(), c.abs_f64());
    let one = Complex::one(p);
    let mut sum = one.clone();
    let mut term = one.clone();
    let mut qk = one.clone();
    let mut qkf = 1.0f64;
    for _ in 0..1_000_000 {
        let qk1 = &qk * q;
        let den = &(&one - &qk1) * &(&one - &(c * &qk));
        if den.abs_f64() < 1e-300 {
            return Err(Error::Domain("c lies on the pole set q^{-n}".into()));
        }
        let num = &(&one - &(a * &qk)) * &(&one - &(b * &qk));
        term = &(&(&term * &num) / &den) * z;
        sum = &sum + &term;
        qk = qk1;
        qkf *= aq;
        if term.is_zero() {
            return Ok(sum);
        }
        let grow = (1.0 + na * qkf) * (1.0 + nb * qkf) / ((1.0 - aq * qkf) * (1.0 - nc * qkf)).max(1e-300);
        let rho = az * grow;
        if rho < 1.0 && nc * qkf < 1.0 {
            let tail = term.abs_f64() * rho / (1.0 - rho);
            if tail <= cfg.tail_eps * sum.abs_f64() {
                return Ok(sum);
            }
        }
    }
    Err(Error::Domain("series did not converge".into()))
}

/// Product of the rational part and the Pochhammer powers of a term.
pub fn eval_term(f: &QHypTerm, pt: &EvalPoint, cfg: &EvalConfig) -> Result<Complex> {
    let q = pt.get(Var::Q);
    let mut acc = pt.eval_rf(f.rat())?;
    for (x, e) in f.pochhammers() {
        let v = qpoch_inf(&pt.eval_monomial(x), q, cfg)?;
        if *e < 0 && v.abs_f64() < 1e-40 {
            return Err(Error::Domain(format!("pole of ({x};q)_inf^{e}")));
        }
        acc = &acc * &v.powi(*e);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::from_f64(re, im, 128)
    }

    #[test]
    fn pochhammer_basics() {
        let q = c(0.5, 0.0);
        assert!(qpoch_inf(&c(0.0, 0.0), &q, &cfg()).unwrap().rel_err(&c(1.0, 0.0)) == 0.0);
        let mut direct = 1.0f64;
        for j in 1..200 {
            direct *= 1.0 - 0.5f64.powi(j);
        }
        let v = qpoch_inf(&q, &q, &cfg()).unwrap();
        assert!((v.to_f64().0 - direct).abs() < 1e-15);
        let x = c(0.3, 0.4);
        let lhs = qpoch_inf(&x, &q, &cfg()).unwrap();
        let rhs = &(&c(1.0, 0.0) - &x) * &qpoch_inf(&(&x * &q), &q, &cfg()).unwrap();
        assert!(lhs.rel_err(&rhs) < 1e-25);
        assert!(qpoch_inf(&x, &c(1.0, 0.0), &cfg()).is_err());
    }

    #[test]
    fn theta_symmetries() {
        let q = c(0.3, 0.2);
        let x = c(0.7, -0.4);
        let t = theta(&x, &q, &cfg()).unwrap();
        assert!(t.rel_err(&theta(&(&q / &x), &q, &cfg()).unwrap()) < 1e-25);
        let tq = theta(&(&x * &q), &q, &cfg()).unwrap();
        assert!(tq.rel_err(&(&(-&x.recip()) * &t)) < 1e-25);
        assert!(theta(&c(0.0, 0.0), &q, &cfg()).is_err());
    }

    #[test]
    fn series_special_values() {
        let pt = EvalPoint::from_f64([(1.0, 0.0), (0.3, 0.1), (0.2, -0.5), (0.4, 0.1), (0.5, 0.1)], 128);
        assert_eq!(phi21(&pt, &cfg()).unwrap().to_f64(), (1.0, 0.0));
        let z0 = pt.with(Var::A, c(0.4, 0.0)).with(Var::Z, c(0.0, 0.0));
        assert_eq!(phi21(&z0, &cfg()).unwrap().to_f64(), (1.0, 0.0));
        assert!(phi21(&pt.with(Var::Z, c(1.0, 0.0)), &cfg()).is_err());
    }
}
