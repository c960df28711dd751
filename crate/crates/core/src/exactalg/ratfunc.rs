use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::error::AlgError;
use super::gcd::poly_gcd;
use super::monomial::{Monomial, Var};
use super::poly::LaurentPoly;
use super::rational::Rational;

/// Element of the rational function field in `(a,b,c,z,q)`.
///
/// Canonical form: `den` is an honest polynomial with no monomial factor,
/// coprime integer coefficients and positive graded-lex leading coefficient;
/// monomial units and constants live in `num`; `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Normalizing constructor: reduces `num/den` to canonical form.
pub fn rf_normalize(num: LaurentPoly, den: LaurentPoly) -> Result<RationalFunc, AlgError> {
    if den.is_zero() {
        return Err(AlgError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RationalFunc::zero());
    }
    let (num, den) = strip_den_units(num, den);
    if den.is_one() || num.is_monomial() {
        return Ok(RationalFunc { num, den });
    }
    let g = poly_gcd(&num, &den)?;
    if g.is_one() {
        return Ok(RationalFunc { num, den });
    }
    let num = num.div_exact(&g).expect("gcd divides numerator");
    let den = den.div_exact(&g).expect("gcd divides denominator");
    let (num, den) = strip_den_units(num, den);
    Ok(RationalFunc { num, den })
}

/// Moves the monomial factor and rational content of `den` into `num`.
fn strip_den_units(num: LaurentPoly, den: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if den.is_monomial() {
        let (m, c) = den.terms()[0].clone();
        return (num.mul_term(&m.inv(), &c.recip()), LaurentPoly::one());
    }
    let m = den.min_monomial();
    let den = if m.is_one() { den } else { den.mul_monomial(&m.inv()) };
    let (c, den) = den.content_primitive();
    let num = if m.is_one() && c.is_one() { num } else { num.mul_term(&m.inv(), &c.recip()) };
    (num, den)
}

impl RationalFunc {
    pub fn zero() -> Self {
        RationalFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgError> {
        rf_normalize(num, den)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// Laurent polynomial (denominator one).
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_poly() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Units of the Laurent ring: nonzero monomial times constant.
    pub fn is_monomial_unit(&self) -> bool {
        self.is_poly() && self.num.is_monomial()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.involves(v)
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let (num, den) = strip_den_units(self.den.clone(), self.num.clone());
        Ok(RationalFunc { num, den })
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RationalFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self * &RationalFunc::from_poly(p.clone())
    }

    /// Image under the ring endomorphism `v_i -> images[i]`. When the map is
    /// an automorphism the result needs no gcd; pass `automorphism = false`
    /// for arbitrary monomial substitutions.
    fn map_monomials(&self, images: &[Monomial; 5], automorphism: bool) -> Result<Self, AlgError> {
        let num = self.num.substitute_monomials(images);
        let den = self.den.substitute_monomials(images);
        if automorphism {
            if den.is_zero() {
                return Err(AlgError::ZeroDenominator);
            }
            if num.is_zero() {
                return Ok(Self::zero());
            }
            let (num, den) = strip_den_units(num, den);
            Ok(RationalFunc { num, den })
        } else {
            if den.is_zero() {
                return Err(AlgError::Pole { var: "monomial substitution" });
            }
            rf_normalize(num, den)
        }
    }

    /// Invertible monomial change of variables (unimodular exponent map).
    pub fn substitute_unimodular(&self, images: &[Monomial; 5]) -> Self {
        self.map_monomials(images, true).expect("automorphism preserves nonzero denominators")
    }

    /// Replace `var` by a monomial (not necessarily invertible).
    pub fn substitute_monomial(&self, var: Var, value: Monomial) -> Result<Self, AlgError> {
        let mut images = identity_images();
        images[var.index()] = value;
        self.map_monomials(&images, false).map_err(|e| match e {
            AlgError::Pole { .. } => AlgError::Pole { var: var.name() },
            e => e,
        })
    }

    /// The shift action `v -> v q^{k_v}`.
    pub fn q_dilate(&self, k: &[i32; 4]) -> Self {
        if k == &[0; 4] {
            return self.clone();
        }
        let num = self.num.q_dilate(k);
        let den = self.den.q_dilate(k);
        let (num, den) = strip_den_units(num, den);
        RationalFunc { num, den }
    }

    /// Exact substitution of an arbitrary rational function for `var`.
    pub fn substitute(&self, var: Var, value: &RationalFunc) -> Result<Self, AlgError> {
        if value.is_monomial_unit() {
            let (m, c) = value.num.terms()[0].clone();
            if c.is_one() {
                return self.substitute_monomial(var, m);
            }
        }
        let n = eval_poly_at(&self.num, var, value)?;
        let d = eval_poly_at(&self.den, var, value)?;
        if d.is_zero() {
            return Err(AlgError::Pole { var: var.name() });
        }
        Ok(&n / &d)
    }

    pub fn to_f64_parts(&self) -> (&LaurentPoly, &LaurentPoly) {
        (&self.num, &self.den)
    }

    /// Exact evaluation at a rational point; `None` at a pole.
    pub fn eval_rational(&self, point: &[Rational; 5]) -> Option<Rational> {
        if point.iter().enumerate().any(|(i, x)| {
            x.is_zero()
                && (self.num.min_degree_in(Var::from_index(i)) < 0 || self.den.min_degree_in(Var::from_index(i)) < 0)
        }) {
            return None;
        }
        let d = self.den.eval_rational(point);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval_rational(point) / &d)
    }
}

pub(crate) fn identity_images() -> [Monomial; 5] {
    [Monomial::var(Var::A), Monomial::var(Var::B), Monomial::var(Var::C), Monomial::var(Var::Z), Monomial::var(Var::Q)]
}

/// `p` with `var` replaced by `value`, via Horner in `var`.
fn eval_poly_at(p: &LaurentPoly, var: Var, value: &RationalFunc) -> Result<RationalFunc, AlgError> {
    if !p.involves(var) {
        return Ok(RationalFunc::from_poly(p.clone()));
    }
    let (offset, coeffs) = p.to_univariate(var);
    let mut acc = RationalFunc::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * value) + &RationalFunc::from_poly(c.clone());
    }
    if offset != 0 {
        if offset < 0 && value.is_zero() {
            return Err(AlgError::Pole { var: var.name() });
        }
        acc = &acc * &value.pow(offset)?;
    }
    Ok(acc)
}

impl Default for RationalFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunc> for &'a RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RationalFunc::from_poly(num);
            }
            return rf_normalize(num, self.den.clone()).unwrap();
        }
        if self.den.is_one() {
            let num = &(&self.num * &rhs.den) + &rhs.num;
            return RationalFunc { num, den: rhs.den.clone() };
        }
        if rhs.den.is_one() {
            let num = &self.num + &(&rhs.num * &self.den);
            return RationalFunc { num, den: self.den.clone() };
        }
        // Henrici: only the shared part of the denominators can cancel.
        let g = poly_gcd(&self.den, &rhs.den).unwrap();
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RationalFunc::zero();
            }
            let den = &self.den * &rhs.den;
            let (num, den) = strip_den_units(num, den);
            return RationalFunc { num, den };
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RationalFunc::zero();
        }
        let g2 = poly_gcd(&num, &g).unwrap();
        let (num, g) = if g2.is_one() { (num, g) } else { (num.div_exact(&g2).unwrap(), g.div_exact(&g2).unwrap()) };
        let den = &(&b1 * &d1) * &g;
        let (num, den) = strip_den_units(num, den);
        RationalFunc { num, den }
    }
}

impl<'a> Sub<&'a RationalFunc> for &'a RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        -&self
    }
}

/// Cancels `gcd(a, b)`; returns `(a/g, b/g)`.
fn cancel(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if b.is_one() || a.is_monomial() || b.is_monomial() {
        return (a.clone(), b.clone());
    }
    let g = poly_gcd(a, b).unwrap();
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap())
    }
}

impl<'a> Mul<&'a RationalFunc> for &'a RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunc::from_poly(&self.num * &rhs.num);
        }
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let (num, den) = strip_den_units(num, den);
        RationalFunc { num, den }
    }
}

impl<'a> Div<&'a RationalFunc> for &'a RationalFunc {
    type Output = RationalFunc;
    fn div(self, rhs: &RationalFunc) -> RationalFunc {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

macro_rules! forward_owned_rf {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunc> for RationalFunc {
            type Output = RationalFunc;
            fn $m(self, rhs: RationalFunc) -> RationalFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_rf!(Add, add);
forward_owned_rf!(Sub, sub);
forward_owned_rf!(Mul, mul);
forward_owned_rf!(Div, div);

impl fmt::Display for RationalFunc {
    /// `num` alone for polynomials, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 && self.num.terms()[0].1.signum() > 0 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// True iff `(var - q^{-j})` divides `p` in the Laurent ring.
pub fn divides_at_qpower(p: &LaurentPoly, var: Var, j: i32) -> bool {
    let mut images = identity_images();
    images[var.index()] = Monomial::var_pow(Var::Q, -j);
    p.substitute_monomials(&images).is_zero()
}
