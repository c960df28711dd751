//! Detection of `unit * (binomial) * (binomial)` factorizations.
//!
//! After dividing by its leading term, a product of two binomials reads
//! `(1 + s)(1 + t) = 1 + s + t + st` with `s, t` below `1` in graded-lex
//! order, so `st` is the trailing term. That pins the split down
//! completely: four terms force `{s, t}` to be the two middle terms, three
//! terms force `s` and `t` to share a monomial (a quadratic in it with
//! rational roots), two terms force `s = -t`.

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPair {
    /// A single term: monomial times rational constant.
    pub unit: LaurentPoly,
    pub first: LaurentPoly,
    pub second: LaurentPoly,
}

impl BinomialPair {
    pub fn expand(&self) -> LaurentPoly {
        &(&self.unit * &self.first) * &self.second
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.signum() < 0 {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == n && &sd * &sd == d {
        Some(Rational::from_bigints(sn, sd))
    } else {
        None
    }
}

fn half_monomial(m: &Monomial) -> Option<Monomial> {
    if m.0.iter().all(|e| e % 2 == 0) {
        let mut h = m.0;
        h.iter_mut().for_each(|e| *e /= 2);
        Some(Monomial(h))
    } else {
        None
    }
}

fn one_plus(m: Monomial, c: Rational) -> LaurentPoly {
    LaurentPoly::from_terms([(Monomial::ONE, Rational::ONE), (m, c)])
}

/// Splits `p` as `unit * first * second` with binomial factors, when such a
/// factorization exists and `p` has at most four terms.
pub fn binomial_pair_factor(p: &LaurentPoly) -> Option<BinomialPair> {
    if p.len() < 2 || p.len() > 4 {
        return None;
    }
    let (lm, lc) = p.leading().cloned().unwrap();
    let lead_inv = lc.recip();
    let monic = p.mul_term(&lm.inv(), &lead_inv);
    let rest: Vec<(Monomial, Rational)> = monic.terms()[1..].to_vec();
    let (s, t) = match rest.as_slice() {
        [(m1, c1), (m2, c2), (m3, c3)] => {
            if *m1 * *m2 != *m3 || &(c1 * c2) != c3 {
                return None;
            }
            ((*m1, c1.clone()), (*m2, c2.clone()))
        }
        [(m1, c1), (m2, c2)] => {
            // 1 + c1 u + c2 u^2 = (1 + x u)(1 + y u): x + y = c1, x y = c2.
            if *m1 * *m1 != *m2 {
                return None;
            }
            let disc = &(c1 * c1) - &(c2 * &Rational::from_int(4));
            let r = rational_sqrt(&disc)?;
            let two = Rational::from_int(2);
            let x = &(c1 + &r) / &two;
            let y = &(c1 - &r) / &two;
            ((*m1, x), (*m1, y))
        }
        [(m1, c1)] => {
            // 1 + c1 w = (1 + x u)(1 - x u) with w = u^2, c1 = -x^2.
            let u = half_monomial(m1)?;
            let x = rational_sqrt(&-c1)?;
            ((u, x.clone()), (u, -x))
        }
        _ => return None,
    };
    let f1 = one_plus(s.0, s.1);
    let f2 = one_plus(t.0, t.1);
    let first = f1.normalize_unit();
    let second = f2.normalize_unit();
    let prod = &first * &second;
    let unit = p.div_exact(&prod)?;
    if !unit.is_monomial() {
        return None;
    }
    let out = BinomialPair { unit, first, second };
    debug_assert_eq!(&out.expand(), p);
    Some(out)
}

/// Exhaustive oracle over splits of the support: used to confirm negative
/// answers in tests. Tries every assignment of the terms of `p` to the four
/// product slots `x1 x2, x1 y2, y1 x2, y1 y2`.
pub fn binomial_pair_factor_bruteforce(p: &LaurentPoly) -> bool {
    if p.len() < 2 || p.len() > 4 {
        return false;
    }
    let terms = p.terms();
    // Fix x1 = 1 and x2 = leading/1 (units absorb the rest); try every choice
    // of the remaining two slot monomials from ratios of support terms.
    let mut cands: Vec<Monomial> = Vec::new();
    for (m1, _) in terms {
        for (m2, _) in terms {
            cands.push(*m1 / *m2);
            if let Some(h) = half_monomial(&(*m1 / *m2)) {
                cands.push(h);
            }
        }
    }
    cands.sort();
    cands.dedup();
    let (lm, lc) = terms[0].clone();
    let monic = p.mul_term(&lm.inv(), &lc.recip());
    for &u in &cands {
        for &v in &cands {
            if u.is_one() || v.is_one() {
                continue;
            }
            // (1 + x u)(1 + y v) = monic: match coefficients of u, v, uv.
            let cu = monic.coeff(&u);
            let cv = monic.coeff(&v);
            let cuv = monic.coeff(&(u * v));
            let candidates: Vec<(Rational, Rational)> = if u == v {
                let disc = &(&cu * &cu) - &(&cuv * &Rational::from_int(4));
                match rational_sqrt(&disc) {
                    Some(r) => {
                        let two = Rational::from_int(2);
                        vec![(&(&cu + &r) / &two, &(&cu - &r) / &two)]
                    }
                    None => vec![],
                }
            } else if u * v == Monomial::ONE {
                continue;
            } else {
                vec![(cu.clone(), cv.clone())]
            };
            for (x, y) in candidates {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let prod = &one_plus(u, x) * &one_plus(v, y);
                if prod == monic {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s).unwrap()
    }

    fn same_up_to_unit(x: &LaurentPoly, y: &LaurentPoly) -> bool {
        x.normalize_unit() == y.normalize_unit()
    }

    #[test]
    fn three_factor_denominator() {
        let f = binomial_pair_factor(&p("q*(c-a*b*z)*(1-z)")).unwrap();
        assert!(f.unit.is_monomial());
        let pair = [f.first.clone(), f.second.clone()];
        assert!(pair.iter().any(|b| same_up_to_unit(b, &p("c-a*b*z"))));
        assert!(pair.iter().any(|b| same_up_to_unit(b, &p("1-z"))));
        assert_eq!(f.expand(), p("q*(c-a*b*z)*(1-z)"));
    }

    #[test]
    fn quadratic_with_rational_roots() {
        let input = p("(a-1)*(a-q^-1)");
        assert_eq!(input.len(), 4);
        let f = binomial_pair_factor(&input).unwrap();
        assert_eq!(f.expand(), input);
        let sq = p("(a-1)^2");
        assert_eq!(sq.len(), 3);
        let g = binomial_pair_factor(&sq).unwrap();
        assert_eq!(g.first, g.second);
        let diff = p("a^2 - 4*b^2");
        assert_eq!(binomial_pair_factor(&diff).unwrap().expand(), diff);
    }

    #[test]
    fn rejects_non_products() {
        for s in ["a+b+c", "a^2+a+1", "a^2+b^2", "a+b+c+z", "a - 1", "z"] {
            assert!(binomial_pair_factor(&p(s)).is_none(), "{s}");
            assert!(!binomial_pair_factor_bruteforce(&p(s)), "{s}");
        }
    }
}
