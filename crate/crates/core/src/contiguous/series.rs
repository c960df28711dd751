//! Truncated power series in `z` with coefficients in `(a, b, c, q)`.
//!
//! Coefficients of hypergeometric series are long products of binomials, so
//! they are kept factored: `num · Π f_i^{e_i}` with canonical (unit-free)
//! factors. Sums pull out the smallest power of every factor and only expand
//! what is left, which keeps zero tests cheap and exact.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{identity_images, LaurentPoly, Monomial, RationalFunc, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoeff {
    num: LaurentPoly,
    factors: Vec<(LaurentPoly, i32)>,
}

fn term_pow(u: &LaurentPoly, e: i32) -> LaurentPoly {
    let (m, c) = u.terms()[0].clone();
    LaurentPoly::term(m.pow(e), c.pow(e))
}

/// `f = unit · canon` with `canon` unit-free.
fn split_unit(f: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let canon = f.normalize_unit();
    let (fm, fc) = f.leading().cloned().unwrap();
    let (gm, gc) = canon.leading().cloned().unwrap();
    (LaurentPoly::term(fm / gm, &fc / &gc), canon)
}

impl SeriesCoeff {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), factors: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, factors: Vec::new() }
    }

    pub fn from_rf(r: &RationalFunc) -> Self {
        Self::from_poly(r.num().clone()).with_factor(r.den(), -1).expect("denominators are nonzero")
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn factors(&self) -> &[(LaurentPoly, i32)] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies by `f^e`.
    pub fn with_factor(mut self, f: &LaurentPoly, e: i32) -> Result<Self> {
        if e == 0 || self.is_zero() {
            return Ok(self);
        }
        if f.is_zero() {
            if e > 0 {
                return Ok(Self::zero());
            }
            return Err(Error::Series("coefficient has a pole".into()));
        }
        if f.len() == 1 {
            self.num = &self.num * &term_pow(f, e);
            return Ok(self);
        }
        let (unit, canon) = split_unit(f);
        if !unit.is_one() {
            self.num = &self.num * &term_pow(&unit, e);
        }
        match self.factors.iter_mut().find(|(g, _)| *g == canon) {
            Some(slot) => {
                slot.1 += e;
            }
            None => self.factors.push((canon, e)),
        }
        self.factors.retain(|(_, e)| *e != 0);
        Ok(self)
    }

    pub fn mul(&self, other: &SeriesCoeff) -> SeriesCoeff {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = Self { num: &self.num * &other.num, factors: self.factors.clone() };
        for (f, e) in &other.factors {
            out = out.with_factor(f, *e).expect("factors are nonzero");
        }
        out
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> SeriesCoeff {
        Self { num: &self.num * p, factors: self.factors.clone() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SeriesCoeff {
        Self { num: self.num.mul_monomial(m), factors: self.factors.clone() }
    }

    /// `x ↦ x q^{k_x}` for `x` in `(a, b, c, z)`.
    pub fn q_dilate(&self, k: &[i32; 4]) -> SeriesCoeff {
        let mut out = Self::from_poly(self.num.q_dilate(k));
        for (f, e) in &self.factors {
            out = out.with_factor(&f.q_dilate(k), *e).expect("dilation keeps factors nonzero");
        }
        out
    }

    /// Substitutes a monomial for one variable.
    pub fn substitute_monomial(&self, var: Var, value: Monomial) -> Result<SeriesCoeff> {
        let mut images = identity_images();
        images[var.index()] = value;
        let mut out = Self::from_poly(self.num.substitute_monomials(&images));
        for (f, e) in &self.factors {
            out = out.with_factor(&f.substitute_monomials(&images), *e)?;
        }
        Ok(out)
    }

    /// Exact sum. The common factor part is the elementwise minimum of the
    /// exponents; the remaining cofactors are expanded and added.
    pub fn sum(items: &[SeriesCoeff]) -> SeriesCoeff {
        let items: Vec<&SeriesCoeff> = items.iter().filter(|c| !c.is_zero()).collect();
        match items.len() {
            0 => return Self::zero(),
            1 => return items[0].clone(),
            _ => {}
        }
        let mut common: Vec<(LaurentPoly, i32)> = Vec::new();
        for c in &items {
            for (f, _) in &c.factors {
                if !common.iter().any(|(g, _)| g == f) {
                    common.push((f.clone(), 0));
                }
            }
        }
        for (f, m) in common.iter_mut() {
            *m = items.iter().map(|c| c.factors.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| *e)).min().unwrap();
        }
        let mut total = LaurentPoly::zero();
        for c in &items {
            let mut p = c.num.clone();
            for (f, m) in &common {
                let e = c.factors.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| *e);
                if e > *m {
                    p = &p * &f.pow((e - m) as u32);
                }
            }
            total = &total + &p;
        }
        common.retain(|(_, m)| *m != 0);
        Self { num: total, factors: common }
    }

    /// Cancels denominator factors that divide the numerator.
    pub fn reduce(mut self) -> SeriesCoeff {
        if self.is_zero() {
            self.factors.clear();
            return self;
        }
        for (f, e) in self.factors.iter_mut() {
            while *e < 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *e += 1;
                    }
                    None => break,
                }
            }
        }
        self.factors.retain(|(_, e)| *e != 0);
        self
    }

    pub fn to_rf(&self) -> RationalFunc {
        let mut num = self.num.clone();
        let mut den = LaurentPoly::one();
        for (f, e) in &self.factors {
            if *e > 0 {
                num = &num * &f.pow(*e as u32);
            } else {
                den = &den * &f.pow((-*e) as u32);
            }
        }
        RationalFunc::new(num, den).expect("factors are nonzero")
    }
}

impl fmt::Display for SeriesCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rf())
    }
}

/// `Σ_{k=0}^{K} c_k z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<SeriesCoeff>,
}

impl FormalSeries {
    pub fn from_coeffs(coeffs: Vec<SeriesCoeff>) -> Self {
        Self { coeffs }
    }

    pub fn from_rational(coeffs: &[RationalFunc]) -> Self {
        Self { coeffs: coeffs.iter().map(SeriesCoeff::from_rf).collect() }
    }

    /// The basic hypergeometric series in `z` through order `k`, via
    /// `c_{n+1} = c_n (1-aq^n)(1-bq^n) / ((1-q^{n+1})(1-cq^n))`.
    pub fn phi21(k: usize) -> Self {
        let one_minus = |v: Var, e: i32| {
            LaurentPoly::from_terms([
                (Monomial::ONE, 1.into()),
                (Monomial::var(v) * Monomial::var_pow(Var::Q, e), (-1).into()),
            ])
        };
        let qpow =
            |e: i32| LaurentPoly::from_terms([(Monomial::ONE, 1.into()), (Monomial::var_pow(Var::Q, e), (-1).into())]);
        let mut coeffs = vec![SeriesCoeff::one()];
        for n in 0..k as i32 {
            let next = coeffs[n as usize]
                .clone()
                .with_factor(&one_minus(Var::A, n), 1)
                .and_then(|c| c.with_factor(&one_minus(Var::B, n), 1))
                .and_then(|c| c.with_factor(&qpow(n + 1), -1))
                .and_then(|c| c.with_factor(&one_minus(Var::C, n), -1))
                .expect("generic factors are nonzero");
            coeffs.push(next);
        }
        Self { coeffs }
    }

    /// Highest stored power of `z`.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, n: usize) -> &SeriesCoeff {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[SeriesCoeff] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> Vec<RationalFunc> {
        self.coeffs.iter().map(SeriesCoeff::to_rf).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SeriesCoeff::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}
