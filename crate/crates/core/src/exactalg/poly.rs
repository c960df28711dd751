use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::{Monomial, Var};
use super::rational::{invmod, mulmod, powmod, Rational};

/// Sparse Laurent polynomial over the rationals in `(a,b,c,z,q)`.
///
/// Terms are stored sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    /// Collects arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            acc.entry(m).and_modify(|e| *e = &*e + &c).or_insert(c);
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        LaurentPoly { terms }
    }

    /// Trusts the caller: terms already sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// A single term: a unit of the Laurent ring (when nonzero).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn trailing(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.binary_search_by(|(x, _)| m.cmp(x)).map(|i| self.terms[i].1.clone()).unwrap_or(Rational::ZERO)
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (x, _)| acc.meet(x)),
        }
    }

    pub fn max_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (x, _)| acc.join(x)),
        }
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_nonneg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiplication by a monomial preserves the graded-lex order only up to
    /// degree shift, which is uniform, so the sorted order survives.
    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m * *mono, c.clone())).collect() }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m * *mono, x * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under the monomial map `v_i -> images[i]`.
    pub fn substitute_monomials(&self, images: &[Monomial; 5]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.substitute(images), c.clone())))
    }

    /// Dilation `v -> v q^{k_v}` for `v` in `(a,b,c,z)`.
    pub fn q_dilate(&self, k: &[i32; 4]) -> Self {
        if k == &[0; 4] {
            return self.clone();
        }
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.0;
            e[4] += m.q_shift(k);
            (Monomial(e), c.clone())
        }))
    }

    /// Integer content and primitive part: `self = content * prim` with `prim`
    /// having coprime integer coefficients and positive graded-lex leading
    /// coefficient.
    pub fn content_primitive(&self) -> (Rational, LaurentPoly) {
        if self.is_zero() {
            return (Rational::ZERO, Self::zero());
        }
        if self.terms.iter().all(|(_, c)| matches!(c, Rational::Small(_, 1))) {
            let mut g: i64 = 0;
            for (_, c) in &self.terms {
                if let Rational::Small(n, _) = c {
                    g = g.gcd(n);
                }
            }
            if self.terms[0].1.signum() < 0 {
                g = -g;
            }
            if g == 1 {
                return (Rational::ONE, self.clone());
            }
            let gr = Rational::from_int(g);
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| match c {
                    Rational::Small(n, _) => (*m, Rational::from_int(n / g)),
                    _ => unreachable!(),
                })
                .collect();
            return (gr, LaurentPoly { terms });
        }
        let mut lcm = BigInt::one();
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(&c.denom());
        }
        let ints: Vec<BigInt> = self.terms.iter().map(|(_, c)| c.numer() * (&lcm / c.denom())).collect();
        for n in &ints {
            g = g.gcd(n);
        }
        if ints[0].is_negative() {
            g = -g;
        }
        let terms = self
            .terms
            .iter()
            .zip(ints)
            .map(|((m, _), n)| (*m, Rational::from_bigints(n / &g, BigInt::one())))
            .collect();
        (Rational::from_bigints(g, lcm), LaurentPoly { terms })
    }

    pub fn primitive(&self) -> LaurentPoly {
        self.content_primitive().1
    }

    /// Removes the monomial content, then the integer content; the canonical
    /// representative of the associate class in the Laurent ring.
    pub fn normalize_unit(&self) -> LaurentPoly {
        let m = self.min_monomial();
        let shifted = if m.is_one() { self.clone() } else { self.mul_monomial(&m.inv()) };
        shifted.primitive()
    }

    /// Exact division in the Laurent ring; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (m, c) = &d.terms[0];
            return Some(self.mul_term(&m.inv(), &c.recip()));
        }
        let mp = self.min_monomial();
        let md = d.min_monomial();
        let p0 = self.mul_monomial(&mp.inv());
        let d0 = d.mul_monomial(&md.inv());
        let q0 = p0.poly_div_exact(&d0)?;
        Some(q0.mul_monomial(&(mp / md)))
    }

    /// Polynomial long division under graded-lex; both operands must have
    /// nonnegative exponents.
    fn poly_div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (ldm, ldc) = d.terms[0].clone();
        for v in Var::ALL {
            if self.degree_in(v) < d.degree_in(v) || self.min_degree_in(v) < d.min_degree_in(v) {
                return None;
            }
        }
        if self.len() < d.len() && d.len() > 1 && self.len() == 1 {
            return None;
        }
        let inv_ldc = ldc.recip();
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((&m, c)) = rem.last_key_value() {
            let t = m / ldm;
            if !t.is_nonneg() {
                return None;
            }
            let tc = c * &inv_ldc;
            for (dm, dc) in &d.terms {
                let key = t * *dm;
                let delta = &tc * dc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v = &*v - &delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((t, tc));
        }
        Some(LaurentPoly::from_sorted_unchecked(quot))
    }

    /// Coefficients with respect to `v`: `self = sum_k coeffs[k] v^(k + offset)`.
    pub fn to_univariate(&self, v: Var) -> (i32, Vec<LaurentPoly>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = self.min_degree_in(v);
        let hi = self.degree_in(v);
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); (hi - lo + 1) as usize];
        for (m, c) in &self.terms {
            let k = m.exp(v);
            let mut e = m.0;
            e[v.index()] = 0;
            buckets[(k - lo) as usize].push((Monomial(e), c.clone()));
        }
        (
            lo,
            buckets
                .into_iter()
                .map(|t| {
                    // Removing one variable keeps relative order within a bucket
                    // only up to degree; re-sort.
                    let mut t = t;
                    t.sort_unstable_by(|x, y| y.0.cmp(&x.0));
                    LaurentPoly { terms: t }
                })
                .collect(),
        )
    }

    pub fn from_univariate(v: Var, offset: i32, coeffs: &[LaurentPoly]) -> LaurentPoly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let mono = Monomial::var_pow(v, k as i32 + offset);
            for (m, x) in &c.terms {
                terms.push((*m * mono, x.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Evaluation modulo a prime; `None` when a coefficient denominator or a
    /// negative power of a zero value is hit.
    pub fn eval_mod(&self, point: &[u64; 5], p: u64) -> Option<u64> {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = c.mod_prime(p)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = if e < 0 {
                    if point[i] == 0 {
                        return None;
                    }
                    invmod(point[i], p)
                } else {
                    point[i]
                };
                t = mulmod(t, powmod(base, e.unsigned_abs() as u64, p), p);
            }
            acc = (acc + t) % p;
        }
        Some(acc)
    }

    /// Exact evaluation at rational values.
    pub fn eval_rational(&self, point: &[Rational; 5]) -> Rational {
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    t = &t * &point[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Sign of the graded-lex leading coefficient.
    pub fn leading_sign(&self) -> i32 {
        self.terms.first().map(|(_, c)| c.signum()).unwrap_or(0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &rhs.terms);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(y[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &x[i].1 + &y[j].1;
                    if !s.is_zero() {
                        out.push((x[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        LaurentPoly { terms: out }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        acc.reserve(self.len() * rhs.len() / 2 + 1);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let p = c1 * c2;
                acc.entry(*m1 * *m2).and_modify(|e| *e = &*e + &p).or_insert(p);
            }
        }
        LaurentPoly::from_map(acc)
    }
}

macro_rules! forward_owned_poly {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_poly!(Add, add);
forward_owned_poly!(Sub, sub);
forward_owned_poly!(Mul, mul);

impl fmt::Display for LaurentPoly {
    /// Canonical text: expanded terms in descending graded-lex order,
    /// `coeff*a^i*b^j*...`, unit coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}
