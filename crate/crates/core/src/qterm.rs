//! q-hypergeometric terms `r · ∏ (x;q)_∞^{e}` and the transformation group
//! of prefactor-times-substitution maps.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{parse_rf, LaurentPoly, Monomial, Rational, RationalFunc, Var};
use crate::paramgroup::{act_on_function, act_on_function_monomial, ParamMatrix, ShiftOp};

/// Rational part times a product of infinite q-Pochhammer powers.
///
/// Canonical form: every base has `q`-exponent zero, except pure powers of
/// `q`, which are folded onto the base `q` itself; multiplicities are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QHypTerm {
    rat: RationalFunc,
    poch: BTreeMap<Monomial, i32>,
}

fn one_minus(x: Monomial) -> RationalFunc {
    RationalFunc::from_poly(LaurentPoly::from_terms([(Monomial::ONE, Rational::ONE), (x, Rational::from_int(-1))]))
}

/// `(x;q)_m` for `m >= 0` as a rational function.
fn finite_poch(x: Monomial, m: i32) -> RationalFunc {
    let mut acc = RationalFunc::one();
    for i in 0..m {
        acc = &acc * &one_minus(x * Monomial::var_pow(Var::Q, i));
    }
    acc
}

fn without_q(x: &Monomial) -> (Monomial, i32) {
    let mut e = x.0;
    let m = e[4];
    e[4] = 0;
    (Monomial(e), m)
}

impl QHypTerm {
    pub fn one() -> Self {
        QHypTerm { rat: RationalFunc::one(), poch: BTreeMap::new() }
    }

    pub fn rational(r: RationalFunc) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Precondition("a q-hypergeometric term must be nonzero".into()));
        }
        Ok(QHypTerm { rat: r, poch: BTreeMap::new() })
    }

    /// Builds and canonicalizes `rat · ∏ (base;q)_∞^{mult}`.
    pub fn new<I: IntoIterator<Item = (Monomial, i32)>>(rat: RationalFunc, factors: I) -> Result<Self> {
        if rat.is_zero() {
            return Err(Error::Precondition("a q-hypergeometric term must be nonzero".into()));
        }
        let mut rat = rat;
        let mut poch: BTreeMap<Monomial, i32> = BTreeMap::new();
        for (x, e) in factors {
            if e == 0 {
                continue;
            }
            let (x0, m) = without_q(&x);
            if x0.is_one() {
                if m <= 0 {
                    return Err(Error::Precondition(format!("(q^{m};q)_inf vanishes identically")));
                }
                // (q^m;q) = (q;q) / (q;q)_{m-1}
                let f = finite_poch(Monomial::var(Var::Q), m - 1);
                rat = &rat * &f.pow(-e)?;
                *poch.entry(Monomial::var(Var::Q)).or_insert(0) += e;
            } else {
                if m > 0 {
                    rat = &rat * &finite_poch(x0, m).pow(-e)?;
                } else if m < 0 {
                    let mut f = RationalFunc::one();
                    for j in 1..=-m {
                        f = &f * &one_minus(x0 * Monomial::var_pow(Var::Q, -j));
                    }
                    rat = &rat * &f.pow(e)?;
                }
                *poch.entry(x0).or_insert(0) += e;
            }
        }
        poch.retain(|_, e| *e != 0);
        Ok(QHypTerm { rat, poch })
    }

    /// Parses factors given as text monomials.
    pub fn from_parts(rat: &str, factors: &[(&str, i32)]) -> Result<Self> {
        let r = parse_rf(rat)?;
        let mut fs = Vec::new();
        for (b, e) in factors {
            fs.push((parse_monomial(b)?, *e));
        }
        Self::new(r, fs)
    }

    pub fn rat(&self) -> &RationalFunc {
        &self.rat
    }

    pub fn pochhammers(&self) -> &BTreeMap<Monomial, i32> {
        &self.poch
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.poch.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.poch.is_empty()
    }

    pub fn mul(&self, other: &QHypTerm) -> QHypTerm {
        let mut poch = self.poch.clone();
        for (x, e) in &other.poch {
            *poch.entry(*x).or_insert(0) += e;
        }
        poch.retain(|_, e| *e != 0);
        QHypTerm { rat: &self.rat * &other.rat, poch }
    }

    pub fn inv(&self) -> QHypTerm {
        QHypTerm {
            rat: self.rat.inv().expect("terms are nonzero"),
            poch: self.poch.iter().map(|(x, e)| (*x, -e)).collect(),
        }
    }

    /// `P(f)/f`, which is rational for every shift.
    pub fn shift_ratio(&self, p: &ShiftOp) -> RationalFunc {
        let mut out = &p.apply(&self.rat) / &self.rat;
        for (x, e) in &self.poch {
            let m = p.q_exponent_of(x);
            if m == 0 {
                continue;
            }
            let f = if m > 0 {
                finite_poch(*x, m).pow(-*e).unwrap()
            } else {
                let mut f = RationalFunc::one();
                for j in 1..=-m {
                    f = &f * &one_minus(*x * Monomial::var_pow(Var::Q, -j));
                }
                f.pow(*e).unwrap()
            };
            out = &out * &f;
        }
        out
    }

    /// `L(f) = f ∘ L^{-1}`, re-canonicalized.
    pub fn act(&self, l: &ParamMatrix) -> QHypTerm {
        if l.is_identity() {
            return self.clone();
        }
        let rat = act_on_function(l, &self.rat);
        let factors = self.poch.iter().map(|(x, e)| (act_on_function_monomial(l, x), *e));
        QHypTerm::new(rat, factors).expect("the group action preserves nonzero terms")
    }

    /// Heine's prefactor `(b, az; q)_∞ / (c, z; q)_∞`.
    pub fn heine_prefactor() -> QHypTerm {
        let m = |a, b, c, z| Monomial::new(a, b, c, z, 0);
        QHypTerm::new(
            RationalFunc::one(),
            [(m(0, 1, 0, 0), 1), (m(1, 0, 0, 1), 1), (m(0, 0, 1, 0), -1), (m(0, 0, 0, 1), -1)],
        )
        .unwrap()
    }

    /// `θ(x;q)^e = (x, q/x; q)_∞^e` as a term.
    pub fn theta(x: Monomial, e: i32) -> Result<QHypTerm> {
        QHypTerm::new(RationalFunc::one(), [(x, e), (Monomial::var(Var::Q) / x, e)])
    }

    /// The prefactor `g` that intertwines the shift ratios of the second
    /// solution: `(c/a, c/b, q²/c)_∞ / (c, q/a, q/b)_∞ · θ(ab, z) / θ(c/ab, c/z)`.
    pub fn second_solution_prefactor() -> QHypTerm {
        let m = |a, b, c, z, q| Monomial::new(a, b, c, z, q);
        let poch = QHypTerm::new(
            RationalFunc::one(),
            [
                (m(-1, 0, 1, 0, 0), 1),
                (m(0, -1, 1, 0, 0), 1),
                (m(0, 0, -1, 0, 2), 1),
                (m(0, 0, 1, 0, 0), -1),
                (m(-1, 0, 0, 0, 1), -1),
                (m(0, -1, 0, 0, 1), -1),
            ],
        )
        .unwrap();
        let t = QHypTerm::theta(m(1, 1, 0, 0, 0), 1)
            .unwrap()
            .mul(&QHypTerm::theta(m(0, 0, 0, 1, 0), 1).unwrap())
            .mul(&QHypTerm::theta(m(-1, -1, 1, 0, 0), -1).unwrap())
            .mul(&QHypTerm::theta(m(0, 0, 1, -1, 0), -1).unwrap());
        poch.mul(&t)
    }
}

pub fn shift_ratio(f: &QHypTerm, p: &ShiftOp) -> RationalFunc {
    f.shift_ratio(p)
}

pub fn act_on_term(l: &ParamMatrix, f: &QHypTerm) -> QHypTerm {
    f.act(l)
}

/// Parses a monomial written as an expression, e.g. `a*z` or `q/c`.
pub fn parse_monomial(s: &str) -> Result<Monomial> {
    let f = parse_rf(s)?;
    match f.as_poly() {
        Some(p) if p.is_monomial() && p.terms()[0].1.is_one() => Ok(p.terms()[0].0),
        _ => Err(Error::Format(format!("'{s}' is not a monomial"))),
    }
}

impl fmt::Display for QHypTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rat.is_one() || self.poch.is_empty() {
            parts.push(format!("({})", self.rat));
        }
        for (x, e) in self.poch.iter().rev() {
            if *e == 1 {
                parts.push(format!("({x};q)_inf"));
            } else {
                parts.push(format!("({x};q)_inf^{e}"));
            }
        }
        write!(f, "{}", parts.join(" * "))
    }
}

#[derive(Serialize, Deserialize)]
struct PochJson {
    base: String,
    mult: i32,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    rat: String,
    poch: Vec<PochJson>,
}

impl Serialize for QHypTerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TermJson {
            rat: self.rat.to_string(),
            poch: self.poch.iter().rev().map(|(x, e)| PochJson { base: x.to_string(), mult: *e }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QHypTerm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TermJson::deserialize(d)?;
        let fs: Vec<(&str, i32)> = j.poch.iter().map(|p| (p.base.as_str(), p.mult)).collect();
        QHypTerm::from_parts(&j.rat, &fs).map_err(serde::de::Error::custom)
    }
}

/// Element `f L` of the semidirect product, acting by `φ ↦ f · L(φ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transformation {
    pub term: QHypTerm,
    pub mat: ParamMatrix,
}

impl Transformation {
    pub fn identity() -> Self {
        Transformation { term: QHypTerm::one(), mat: ParamMatrix::IDENTITY }
    }

    pub fn new(term: QHypTerm, mat: ParamMatrix) -> Self {
        Transformation { term, mat }
    }

    /// Heine's transformation.
    pub fn heine() -> Self {
        Transformation { term: QHypTerm::heine_prefactor(), mat: ParamMatrix::heine() }
    }

    /// The `a ↔ b` interchange.
    pub fn swap_ab() -> Self {
        Transformation { term: QHypTerm::one(), mat: ParamMatrix::swap_ab() }
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity() && self.term.is_one()
    }

    /// `(f₁L₁)(f₂L₂) = (f₁ · L₁(f₂)) (L₁L₂)`.
    pub fn multiply(&self, other: &Transformation) -> Transformation {
        Transformation { term: self.term.mul(&other.term.act(&self.mat)), mat: self.mat * other.mat }
    }

    pub fn inverse(&self) -> Transformation {
        let li = self.mat.inverse();
        Transformation { term: self.term.inv().act(&li), mat: li }
    }

    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=limit {
            if p.is_identity() {
                return Some(k);
            }
            p = p.multiply(self);
        }
        None
    }
}

pub fn trans_multiply(t1: &Transformation, t2: &Transformation) -> Transformation {
    t1.multiply(t2)
}

pub fn trans_equal(t1: &Transformation, t2: &Transformation) -> bool {
    t1 == t2
}
