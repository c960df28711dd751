//! Three-term relations and the membership test built on them.

use serde::{Deserialize, Serialize};

use crate::contiguous::normal_form::{clear_common, normal_form, normal_form_in, NormalForm, StepOrder};
use crate::contiguous::verify::verify_annihilates;
use crate::diffop::DiffOperator;
use crate::error::{Error, Result};
use crate::exactalg::{parse_poly, poly_latex, LaurentPoly, RationalFunc};
use crate::paramgroup::ShiftOp;

/// `p_1 X_1 + p_2 X_2 + p_3 X_3` in the ideal, with coprime polynomial
/// coefficients and positive leading coefficient of `p_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermRelation {
    pub shifts: [ShiftOp; 3],
    pub coeffs: [LaurentPoly; 3],
    /// Highest order at which the relation has been checked on the series.
    pub verified_to_order: Option<usize>,
}

impl ThreeTermRelation {
    pub fn to_operator(&self) -> DiffOperator {
        DiffOperator::from_terms(
            self.shifts.iter().zip(&self.coeffs).map(|(x, p)| (*x, RationalFunc::from_poly(p.clone()))),
        )
    }

    /// Checks the relation on the series and records the order.
    pub fn verify(&mut self, k: usize) -> Result<bool> {
        let ok = verify_annihilates(&self.to_operator(), k)?;
        self.verified_to_order = ok.then_some(k);
        Ok(ok)
    }

    pub fn coeff_of(&self, x: &ShiftOp) -> Option<&LaurentPoly> {
        self.shifts.iter().position(|s| s == x).map(|i| &self.coeffs[i])
    }

    pub fn to_latex(&self) -> String {
        let body: Vec<String> = self
            .shifts
            .iter()
            .zip(&self.coeffs)
            .map(|(x, p)| {
                let shift = if x.is_identity() { String::new() } else { format!(" {}", x.to_latex()) };
                format!("\\left({}\\right){}", poly_latex(p), shift)
            })
            .collect();
        format!("\\[\n{} \\in \\mathcal{{I}}\n\\]", body.join("\n + "))
    }
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    shifts: [[i32; 4]; 3],
    coeffs: [String; 3],
    verified_to_order: Option<usize>,
}

impl Serialize for ThreeTermRelation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RelationJson {
            shifts: self.shifts.map(|x| x.0),
            coeffs: self.coeffs.clone().map(|p| p.to_string()),
            verified_to_order: self.verified_to_order,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThreeTermRelation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RelationJson::deserialize(d)?;
        let mut coeffs = Vec::new();
        for c in &j.coeffs {
            coeffs.push(parse_poly(c).map_err(serde::de::Error::custom)?);
        }
        Ok(ThreeTermRelation {
            shifts: j.shifts.map(ShiftOp),
            coeffs: coeffs.try_into().unwrap(),
            verified_to_order: j.verified_to_order,
        })
    }
}

fn cross(n: [&NormalForm; 3]) -> [RationalFunc; 3] {
    let m = |x: &RationalFunc, y: &RationalFunc| x * y;
    [
        &m(&n[1].alpha, &n[2].beta) - &m(&n[2].alpha, &n[1].beta),
        &m(&n[2].alpha, &n[0].beta) - &m(&n[0].alpha, &n[2].beta),
        &m(&n[0].alpha, &n[1].beta) - &m(&n[1].alpha, &n[0].beta),
    ]
}

fn finish(shifts: [ShiftOp; 3], raw: [RationalFunc; 3]) -> Result<ThreeTermRelation> {
    if raw.iter().any(|r| r.is_zero()) {
        return Err(Error::Precondition(format!(
            "degenerate relation for {}, {}, {}",
            shifts[0], shifts[1], shifts[2]
        )));
    }
    let mut c: Vec<LaurentPoly> = clear_common(&raw);
    if c[2].leading_sign() < 0 {
        c = c.into_iter().map(|p| -p).collect();
    }
    Ok(ThreeTermRelation { shifts, coeffs: c.try_into().unwrap(), verified_to_order: None })
}

fn check_distinct(x: &[ShiftOp; 3]) -> Result<()> {
    if x[0] == x[1] || x[0] == x[2] || x[1] == x[2] {
        return Err(Error::DuplicateShifts);
    }
    Ok(())
}

/// The unique (up to a rational factor) relation on three distinct shifts,
/// from the normal forms `X_i ≡ α_i + β_i Z`: the coefficient vector is the
/// cross product of `(α_i)` and `(β_i)`.
pub fn three_term(x1: ShiftOp, x2: ShiftOp, x3: ShiftOp) -> Result<ThreeTermRelation> {
    three_term_in(x1, x2, x3, StepOrder::Forward)
}

/// [`three_term`] with normal forms reduced along the given order.
pub fn three_term_in(x1: ShiftOp, x2: ShiftOp, x3: ShiftOp, order: StepOrder) -> Result<ThreeTermRelation> {
    let shifts = [x1, x2, x3];
    check_distinct(&shifts)?;
    let n = shifts.map(|x| normal_form_in(&x, order));
    finish(shifts, cross([&n[0], &n[1], &n[2]]))
}

/// The same relation derived another way: relate `X_3^{-1} X_1`,
/// `X_3^{-1} X_2` and `1`, then multiply on the left by `X_3`. The quotients
/// can have twice the degree of the inputs, so this is much slower.
pub fn three_term_pivot(x1: ShiftOp, x2: ShiftOp, x3: ShiftOp) -> Result<ThreeTermRelation> {
    let shifts = [x1, x2, x3];
    check_distinct(&shifts)?;
    let inv = x3.inv();
    let n1 = normal_form(&(inv * x1));
    let n2 = normal_form(&(inv * x2));
    let n3 = normal_form(&ShiftOp::IDENTITY);
    let raw = cross([&n1, &n2, &n3]).map(|r| x3.apply(&r));
    finish(shifts, raw)
}

fn max_degree_first(d: &DiffOperator) -> Vec<ShiftOp> {
    let mut s = d.support();
    s.sort_by(|x, y| y.degree().cmp(&x.degree()).then(x.cmp(y)));
    s
}

/// Membership by elimination. While three or more shifts remain, the one of
/// largest degree is removed with the relation it satisfies together with
/// the two shifts of smallest degree. A nonzero operator with at most two
/// terms is never in the ideal.
pub fn ideal_membership(d: &DiffOperator) -> Result<bool> {
    let mut d = d.clone();
    while d.length() >= 3 {
        let s = max_degree_first(&d);
        let n = s.len();
        let rel = three_term(s[0], s[n - 2], s[n - 1])?;
        let factor = &d.coeff(&s[0]) / &RationalFunc::from_poly(rel.coeffs[0].clone());
        d = &d - &rel.to_operator().scale_left(&factor);
        debug_assert!(d.coeff(&s[0]).is_zero());
    }
    Ok(d.is_zero())
}

/// Membership via normal forms: `Σ r_X α_X = 0 = Σ r_X β_X`.
pub fn ideal_membership_nf(d: &DiffOperator) -> bool {
    let mut a = RationalFunc::zero();
    let mut b = RationalFunc::zero();
    for (x, r) in d.terms() {
        let nf = normal_form(x);
        a = &a + &(r * &nf.alpha);
        b = &b + &(r * &nf.beta);
    }
    a.is_zero() && b.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contiguous::generators::generators;

    fn poly(s: &str) -> LaurentPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn pa_is_recovered() {
        let r = three_term(ShiftOp::A, ShiftOp::IDENTITY, ShiftOp::Z).unwrap();
        assert_eq!(r.coeffs, [poly("1-a"), poly("-1"), poly("a")]);
    }

    #[test]
    fn heine_image_is_recovered() {
        let bc = ShiftOp::B * ShiftOp::C;
        let r = three_term(ShiftOp::C, ShiftOp::IDENTITY, bc).unwrap();
        let expect = [poly("b-c"), poly("-b*(1-c)"), poly("c*(1-b)")];
        let sign = if r.coeffs[0] == expect[0] { 1 } else { -1 };
        for (got, want) in r.coeffs.iter().zip(&expect) {
            assert_eq!(*got, want.scale(&sign.into()));
        }
    }

    #[test]
    fn derivations_agree() {
        let t = [ShiftOp::A, ShiftOp::B, ShiftOp::IDENTITY];
        let mut r = three_term(t[0], t[1], t[2]).unwrap();
        assert_eq!(r, three_term_pivot(t[0], t[1], t[2]).unwrap());
        assert!(r.verify(24).unwrap());
        assert_eq!(r.verified_to_order, Some(24));
    }

    #[test]
    fn duplicates_are_rejected() {
        assert!(matches!(three_term(ShiftOp::A, ShiftOp::A, ShiftOp::Z), Err(Error::DuplicateShifts)));
    }

    #[test]
    fn membership_examples() {
        let g = generators();
        assert!(ideal_membership(&g[2]).unwrap());
        assert!(ideal_membership(&(&g[0] + &g[1])).unwrap());
        let off = &g[0] + &DiffOperator::one();
        assert!(!ideal_membership(&off).unwrap());
        assert!(!ideal_membership_nf(&off));
        assert!(ideal_membership_nf(&g[6]));
    }

    #[test]
    fn json_shape() {
        let r = three_term(ShiftOp::A, ShiftOp::IDENTITY, ShiftOp::Z).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["shifts"][0], serde_json::json!([1, 0, 0, 0]));
        let back: ThreeTermRelation = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
