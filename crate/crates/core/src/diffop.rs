//! Operators `Σ r_X X` with rational coefficients and shift operators `X`.
//!
//! Multiplication follows `(r X)(s Y) = r X(s) XY`. Transformations act by
//! conjugation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::contiguous::series::{FormalSeries, SeriesCoeff};
use crate::error::{Error, Result};
use crate::exactalg::{parse_rf, poly_lcm, rf_latex, LaurentPoly, Monomial, RationalFunc, Var};
use crate::paramgroup::{act_on_function, conjugate_shift, ShiftOp};
use crate::qterm::Transformation;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiffOperator {
    terms: BTreeMap<ShiftOp, RationalFunc>,
}

impl DiffOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::shift(ShiftOp::IDENTITY)
    }

    pub fn shift(x: ShiftOp) -> Self {
        Self::term(x, RationalFunc::one())
    }

    pub fn scalar(r: RationalFunc) -> Self {
        Self::term(ShiftOp::IDENTITY, r)
    }

    pub fn term(x: ShiftOp, r: RationalFunc) -> Self {
        let mut d = Self::zero();
        d.add_term(x, r);
        d
    }

    /// Sums repeated shifts.
    pub fn from_terms<I: IntoIterator<Item = (ShiftOp, RationalFunc)>>(it: I) -> Self {
        let mut d = Self::zero();
        for (x, r) in it {
            d.add_term(x, r);
        }
        d
    }

    /// Builds an operator from `(shift, coefficient expression)` pairs.
    pub fn parse_terms(terms: &[(&str, &str)]) -> Result<Self> {
        let mut d = Self::zero();
        for (x, r) in terms {
            d.add_term(ShiftOp::parse(x)?, parse_rf(r)?);
        }
        Ok(d)
    }

    pub fn add_term(&mut self, x: ShiftOp, r: RationalFunc) {
        if r.is_zero() {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(old) => {
                let s = &*old + &r;
                if s.is_zero() {
                    self.terms.remove(&x);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(x, r);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<ShiftOp, RationalFunc> {
        &self.terms
    }

    pub fn length(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single-term operators are exactly the units.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, x: &ShiftOp) -> RationalFunc {
        self.terms.get(x).cloned().unwrap_or_else(RationalFunc::zero)
    }

    pub fn support(&self) -> Vec<ShiftOp> {
        self.terms.keys().copied().collect()
    }

    /// `r · D`.
    pub fn scale_left(&self, r: &RationalFunc) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(x, c)| (*x, r * c)).collect() }
    }

    /// `D · X`.
    pub fn mul_shift_right(&self, s: &ShiftOp) -> Self {
        Self { terms: self.terms.iter().map(|(x, c)| (*x * *s, c.clone())).collect() }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        op_multiply(self, other)
    }

    pub fn conjugate(&self, t: &Transformation) -> Self {
        conjugate_op(t, self)
    }

    /// Multiplies on the left by the lcm of the coefficient denominators and a
    /// monomial making every exponent of `z` nonnegative. The returned
    /// operator has polynomial coefficients; the multiplier is returned too.
    pub fn left_clear(&self) -> (LaurentPoly, Self) {
        let mut l = LaurentPoly::one();
        for c in self.terms.values() {
            if !c.den().is_one() {
                l = poly_lcm(&l, c.den());
            }
        }
        let mut zmin = 0;
        for c in self.terms.values() {
            let p = c.num() * &l;
            let p = p.div_exact(c.den()).expect("lcm is divisible by each denominator");
            zmin = zmin.min(p.min_degree_in(Var::Z));
        }
        let l = l.mul_monomial(&Monomial::var_pow(Var::Z, -zmin));
        let cleared = self.scale_left(&RationalFunc::from_poly(l.clone()));
        debug_assert!(cleared.terms.values().all(|c| c.is_poly()));
        (l, cleared)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (x, c)) in self.terms.iter().enumerate() {
            let single = c.is_poly() && c.num().len() == 1;
            let mut body = rf_latex(c);
            let neg = single && body.starts_with('-');
            if neg {
                body.remove(0);
            }
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            if x.is_identity() {
                out.push_str(if single { &body } else { "" });
                if !single {
                    out.push_str(&format!("\\left({body}\\right)"));
                }
            } else {
                if !single {
                    out.push_str(&format!("\\left({body}\\right) "));
                } else if body != "1" {
                    out.push_str(&body);
                    out.push(' ');
                }
                out.push_str(&x.to_latex());
            }
        }
        out
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if x.is_identity() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{x}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &DiffOperator {
    type Output = DiffOperator;
    fn add(self, rhs: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (x, c) in &rhs.terms {
            out.add_term(*x, c.clone());
        }
        out
    }
}

impl std::ops::Neg for &DiffOperator {
    type Output = DiffOperator;
    fn neg(self) -> DiffOperator {
        DiffOperator { terms: self.terms.iter().map(|(x, c)| (*x, -c)).collect() }
    }
}

impl std::ops::Sub for &DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: &DiffOperator) -> DiffOperator {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &DiffOperator {
    type Output = DiffOperator;
    fn mul(self, rhs: &DiffOperator) -> DiffOperator {
        op_multiply(self, rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    shift: [i32; 4],
    coeff: String,
}

impl Serialize for DiffOperator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self.terms.iter().map(|(x, c)| TermJson { shift: x.0, coeff: c.to_string() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiffOperator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(d)?;
        let mut out = DiffOperator::zero();
        for t in v {
            let c = parse_rf(&t.coeff).map_err(serde::de::Error::custom)?;
            out.add_term(ShiftOp(t.shift), c);
        }
        Ok(out)
    }
}

pub fn op_multiply(d1: &DiffOperator, d2: &DiffOperator) -> DiffOperator {
    let mut out = DiffOperator::zero();
    for (x, r) in &d1.terms {
        for (y, s) in &d2.terms {
            out.add_term(*x * *y, r * &x.apply(s));
        }
    }
    out
}

/// `t D t^{-1}`: the term `r P` maps to `L(r) / (P'(h)/h) · P'` with
/// `P' = L P L^{-1}`.
pub fn conjugate_op(t: &Transformation, d: &DiffOperator) -> DiffOperator {
    let mut out = DiffOperator::zero();
    for (p, r) in &d.terms {
        let p2 = conjugate_shift(&t.mat, p);
        let lr = act_on_function(&t.mat, r);
        let ratio = t.term.shift_ratio(&p2);
        out.add_term(p2, &lr / &ratio);
    }
    out
}

/// Power-series expansion in `z` of a coefficient, up to `z^k`.
fn expand_in_z(r: &RationalFunc, k: usize) -> Result<Vec<SeriesCoeff>> {
    let (off, num) = r.num().to_univariate(Var::Z);
    if off < 0 {
        return Err(Error::Series(format!("coefficient {r} has a pole at z = 0; left-clear the operator first")));
    }
    let n_at = |m: usize| -> Option<&LaurentPoly> {
        let i = m.checked_sub(off as usize)?;
        num.get(i).filter(|p| !p.is_zero())
    };
    let mut out = vec![SeriesCoeff::zero(); k + 1];
    if !r.den().involves(Var::Z) {
        for (m, slot) in out.iter_mut().enumerate() {
            if let Some(p) = n_at(m) {
                *slot = SeriesCoeff::from_poly(p.clone()).with_factor(r.den(), -1)?;
            }
        }
        return Ok(out);
    }
    let (doff, den) = r.den().to_univariate(Var::Z);
    if doff != 0 || den[0].is_zero() {
        return Err(Error::Series(format!("denominator of {r} vanishes at z = 0; left-clear the operator first")));
    }
    // 1/d = Σ E_n z^n / d_0^{n+1}, E_0 = 1, E_n = -Σ_{m=1}^{n} d_m E_{n-m} d_0^{m-1}.
    let d0 = &den[0];
    let mut e: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    let mut d0_pows = vec![LaurentPoly::one()];
    for n in 1..=k {
        d0_pows.push(&d0_pows[n - 1] * d0);
        let mut acc = LaurentPoly::zero();
        for m in 1..=n.min(den.len() - 1) {
            if den[m].is_zero() {
                continue;
            }
            acc = &acc + &(&(&den[m] * &e[n - m]) * &d0_pows[m - 1]);
        }
        e.push(-acc);
    }
    for (n, slot) in out.iter_mut().enumerate() {
        let mut parts = Vec::new();
        for m in 0..=n {
            if let Some(p) = n_at(m) {
                let c = SeriesCoeff::from_poly(p * &e[n - m]).with_factor(d0, -((n - m + 1) as i32))?;
                parts.push(c);
            }
        }
        *slot = SeriesCoeff::sum(&parts);
    }
    Ok(out)
}

/// Coefficients of `z^0..z^K` of `D S`. Shifts in `a, b, c` act on the
/// coefficients of `S` and a shift `k_z` multiplies the coefficient of `z^n`
/// by `q^{n k_z}`.
pub fn apply_to_series(d: &DiffOperator, s: &FormalSeries, k: usize) -> Result<FormalSeries> {
    let k = k.min(s.order());
    let mut parts: Vec<Vec<SeriesCoeff>> = vec![Vec::new(); k + 1];
    for (x, r) in &d.terms {
        let rz = expand_in_z(r, k)?;
        let [ka, kb, kc, kz] = x.0;
        let shifted: Vec<SeriesCoeff> = (0..=k)
            .map(|n| s.coeff(n).q_dilate(&[ka, kb, kc, 0]).mul_monomial(&Monomial::var_pow(Var::Q, kz * n as i32)))
            .collect();
        for (m, rm) in rz.iter().enumerate() {
            if rm.is_zero() {
                continue;
            }
            for n in m..=k {
                parts[n].push(rm.mul(&shifted[n - m]));
            }
        }
    }
    Ok(FormalSeries::from_coeffs(parts.iter().map(|p| SeriesCoeff::sum(p)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(terms: &[(&str, &str)]) -> DiffOperator {
        DiffOperator::parse_terms(terms).unwrap()
    }

    #[test]
    fn products_act_on_coefficients() {
        let a = DiffOperator::shift(ShiftOp::A);
        let p = op(&[("1", "1-a")]);
        assert_eq!(&a * &p, op(&[("A", "1-q*a")]));
        let l = op(&[("Z", "a")]);
        let r = op(&[("A", "b")]);
        assert_eq!(&l * &r, op(&[("A Z", "a*b")]));
    }

    #[test]
    fn inverse_shift_times_pa() {
        let pa = op(&[("A", "1-a"), ("1", "-1"), ("Z", "a")]);
        let ai = DiffOperator::shift(ShiftOp::A.inv());
        let expect = op(&[("1", "1-a/q"), ("A^-1", "-1"), ("A^-1 Z", "a/q")]);
        assert_eq!(&ai * &pa, expect);
    }

    #[test]
    fn left_clearing_gives_polynomials() {
        let d = op(&[("A B C", "1"), ("Z", "(1-c)/(z*(1-a)*(1-b))"), ("1", "-(1-c)/(z*(1-a)*(1-b))")]);
        let (l, c) = d.left_clear();
        assert!(c.terms().values().all(|r| r.is_poly() && r.num().min_degree_in(Var::Z) >= 0));
        assert_eq!(c.coeff(&ShiftOp::new(1, 1, 1, 0)), RationalFunc::from_poly(l));
    }

    #[test]
    fn json_round_trip() {
        let d = op(&[("A", "1-a"), ("1", "-1"), ("Z", "a/(1-c)")]);
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains("\"shift\":[1,0,0,0]"));
        let back: DiffOperator = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn latex_is_readable() {
        let d = op(&[("A", "1-a"), ("1", "-1"), ("Z", "a")]);
        assert_eq!(d.to_latex(), "-1 + a Z + \\left(-a + 1\\right) A");
    }
}
