//! Forced factors `x - q^{-j}` of three-term relation coefficients.
//!
//! Order the shifts by their `x`-component, `k_1 > k_2 > k_3`. Then
//! `x - q^{-j}` divides `p_1` for `k_2 ≤ j < k_1` and does not for
//! `k_3 ≤ j < k_2`; it divides neither `p_2` for `k_3 ≤ j < k_1` nor `p_3`
//! for `k_2 ≤ j < k_1`.

use serde::Serialize;

use crate::contiguous::relation::ThreeTermRelation;
use crate::error::{Error, Result};
use crate::exactalg::{divides_at_qpower, Var};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityClaim {
    pub var: &'static str,
    /// Position (1-based) after sorting by the variable's shift component.
    pub coeff: usize,
    pub j: i32,
    pub expected: bool,
    pub observed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub claims: Vec<DivisibilityClaim>,
}

impl DivisibilityReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.expected == c.observed)
    }
}

fn claims_for(rel: &ThreeTermRelation, var: Var, out: &mut Vec<DivisibilityClaim>) {
    let idx = var.index();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by_key(|&i| -rel.shifts[i].0[idx]);
    let k: Vec<i32> = order.iter().map(|&i| rel.shifts[i].0[idx]).collect();
    let mut push = |pos: usize, range: std::ops::Range<i32>, expected: bool| {
        let p = &rel.coeffs[order[pos]];
        for j in range {
            out.push(DivisibilityClaim {
                var: var.name(),
                coeff: pos + 1,
                j,
                expected,
                observed: divides_at_qpower(p, var, j),
            });
        }
    };
    push(0, k[1]..k[0], true);
    push(0, k[2]..k[1], false);
    push(1, k[2]..k[0], false);
    push(2, k[1]..k[0], false);
}

fn distinct(rel: &ThreeTermRelation, var: Var) -> bool {
    let i = var.index();
    let k = rel.shifts.map(|s| s.0[i]);
    k[0] != k[1] && k[0] != k[2] && k[1] != k[2]
}

/// Checks every claim for `a` and `b` whose shift components are pairwise
/// distinct.
pub fn divisibility_pattern(rel: &ThreeTermRelation) -> Result<DivisibilityReport> {
    let mut claims = Vec::new();
    let mut any = false;
    for v in [Var::A, Var::B] {
        if distinct(rel, v) {
            any = true;
            claims_for(rel, v, &mut claims);
        }
    }
    if !any {
        return Err(Error::Precondition(
            "neither the a- nor the b-components of the shifts are pairwise distinct".into(),
        ));
    }
    Ok(DivisibilityReport { claims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contiguous::relation::three_term;
    use crate::paramgroup::ShiftOp;

    #[test]
    fn unit_spacing() {
        let rel = three_term(ShiftOp::A, ShiftOp::Z, ShiftOp::A.inv()).unwrap();
        let rep = divisibility_pattern(&rel).unwrap();
        assert!(rep.all_hold(), "{rep:?}");
        let c = |coeff, j| rep.claims.iter().find(|c| c.coeff == coeff && c.j == j).unwrap();
        assert!(c(1, 0).observed && c(1, 0).expected);
        assert!(!c(1, -1).observed);
        assert!(!c(2, 0).observed && !c(2, -1).observed);
    }

    #[test]
    fn wider_gap() {
        let rel = three_term(ShiftOp::A.pow(2), ShiftOp::IDENTITY, ShiftOp::A.inv()).unwrap();
        let rep = divisibility_pattern(&rel).unwrap();
        assert!(rep.all_hold());
        assert!(divides_at_qpower(&rel.coeffs[0], Var::A, 0));
        assert!(divides_at_qpower(&rel.coeffs[0], Var::A, 1));
    }

    #[test]
    fn inapplicable() {
        let rel = three_term(ShiftOp::A, ShiftOp::IDENTITY, ShiftOp::Z).unwrap();
        assert!(divisibility_pattern(&rel).is_err());
    }
}
