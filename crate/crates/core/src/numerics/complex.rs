//! Complex numbers over arbitrary-precision binary floats.

use std::fmt;

use astro_float::{BigFloat, RoundingMode, Sign};

use crate::exactalg::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Nearest `f64` to a big float (53 leading bits).
pub fn big_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = *words.last().unwrap() as f64 / 2f64.powi(64);
    let v = top * 2f64.powi(e);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

fn bigint_to_big(n: &num_bigint::BigInt, p: usize) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    let base = BigFloat::from_u64(u64::MAX, p).add(&BigFloat::from_u64(1, p), p, RM);
    let mut acc = BigFloat::from_u64(0, p);
    for d in digits.iter().rev() {
        acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(*d, p), p, RM);
    }
    if sign == num_bigint::Sign::Minus {
        acc.neg()
    } else {
        acc
    }
}

pub fn rational_to_big(r: &Rational, p: usize) -> BigFloat {
    match r {
        Rational::Small(n, d) => BigFloat::from_i64(*n, p).div(&BigFloat::from_i64(*d, p), p, RM),
        _ => bigint_to_big(&r.numer(), p).div(&bigint_to_big(&r.denom(), p), p, RM),
    }
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
    p: usize,
}

impl Complex {
    pub fn new(re: BigFloat, im: BigFloat, p: usize) -> Self {
        Self { re, im, p }
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        Self::new(BigFloat::from_f64(re, p), BigFloat::from_f64(im, p), p)
    }

    pub fn from_polar(r: f64, theta: f64, p: usize) -> Self {
        Self::from_f64(r * theta.cos(), r * theta.sin(), p)
    }

    pub fn from_rational(r: &Rational, p: usize) -> Self {
        Self::new(rational_to_big(r, p), BigFloat::from_u64(0, p), p)
    }

    pub fn zero(p: usize) -> Self {
        Self::from_f64(0.0, 0.0, p)
    }

    pub fn one(p: usize) -> Self {
        Self::from_f64(1.0, 0.0, p)
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.p;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.p, RM)
    }

    pub fn abs_f64(&self) -> f64 {
        big_to_f64(&self.abs())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (big_to_f64(&self.re), big_to_f64(&self.im))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg(), self.p)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        let p = self.p;
        Self::new(self.re.div(&n, p, RM), self.im.neg().div(&n, p, RM), p)
    }

    pub fn powi(&self, e: i32) -> Self {
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one(self.p);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// `|self - other| / |other|` as an `f64`.
    pub fn rel_err(&self, other: &Complex) -> f64 {
        let d = self - other;
        if other.is_zero() {
            return d.abs_f64();
        }
        big_to_f64(&d.abs().div(&other.abs(), self.p, RM))
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64();
        if im >= 0.0 {
            write!(f, "{re:.15e}+{im:.15e}i")
        } else {
            write!(f, "{re:.15e}{im:.15e}i")
        }
    }
}

impl std::ops::Add for &Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        let p = self.p.max(o.p);
        Complex::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM), p)
    }
}

impl std::ops::Sub for &Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        let p = self.p.max(o.p);
        Complex::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM), p)
    }
}

impl std::ops::Mul for &Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        let p = self.p.max(o.p);
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Complex::new(re, im, p)
    }
}

impl std::ops::Div for &Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        self * &o.recip()
    }
}

impl std::ops::Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(BigFloat::neg(&self.re), BigFloat::neg(&self.im), self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_matches_f64() {
        let p = 128;
        let x = Complex::from_f64(0.3, -0.7, p);
        let y = Complex::from_f64(-1.25, 0.5, p);
        let (re, im) = (&x * &y).to_f64();
        assert!((re - (0.3 * -1.25 + 0.7 * 0.5)).abs() < 1e-15);
        assert!((im - (0.3 * 0.5 + 0.7 * 1.25)).abs() < 1e-15);
        let back = &(&x / &y) * &y;
        assert!(back.rel_err(&x) < 1e-30);
        assert!((x.powi(-3).rel_err(&(&(&x * &x) * &x).recip())) < 1e-30);
    }

    #[test]
    fn conversions() {
        assert_eq!(big_to_f64(&BigFloat::from_f64(-3.5, 128)), -3.5);
        let r = Rational::new(-7, 4);
        assert_eq!(Complex::from_rational(&r, 128).to_f64(), (-1.75, 0.0));
        let big = Rational::from_bigints("123456789012345678901234567890".parse().unwrap(), 1.into());
        let v = big_to_f64(&rational_to_big(&big, 192));
        assert!((v / 1.2345678901234568e29 - 1.0).abs() < 1e-15);
    }
}
