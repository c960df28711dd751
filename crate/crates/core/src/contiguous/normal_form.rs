//! Reduction of any shift to the basis `{1, Z}` modulo the ideal.
//!
//! For every shift `X` there are unique rational `α, β` with
//! `X ≡ α + β Z`. The unit shifts and `Z^2` come straight from the
//! generators; everything else follows by peeling off one unit step
//! `X = S Y` along the coordinate of largest absolute value.

use std::collections::hash_map::Entry;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;

use crate::contiguous::generators::generators;
use crate::diffop::DiffOperator;
use crate::exactalg::{poly_gcd_many, poly_lcm, LaurentPoly, RationalFunc};
use crate::paramgroup::ShiftOp;

/// `X ≡ alpha + beta Z` modulo the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub alpha: RationalFunc,
    pub beta: RationalFunc,
}

/// Which coordinate the induction peels first when several have the same
/// largest absolute value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum StepOrder {
    /// Earliest of `a, b, c, z`.
    #[default]
    Forward,
    /// Latest of `a, b, c, z`.
    Reverse,
}

type Table = FxHashMap<(StepOrder, ShiftOp), Arc<NormalForm>>;

fn nf_table() -> &'static Mutex<Table> {
    static TABLE: OnceLock<Mutex<Table>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut m = FxHashMap::default();
        for (x, nf) in base_cases() {
            let nf = Arc::new(nf);
            m.insert((StepOrder::Forward, x), nf.clone());
            m.insert((StepOrder::Reverse, x), nf);
        }
        Mutex::new(m)
    })
}

/// Solves `g_T T + g_1 + g_Z Z ∈ I` for `T`.
fn solve_for(g: &DiffOperator, t: ShiftOp) -> NormalForm {
    let gt = g.coeff(&t);
    let alpha = -&(&g.coeff(&ShiftOp::IDENTITY) / &gt);
    let beta = -&(&g.coeff(&ShiftOp::Z) / &gt);
    NormalForm { alpha, beta }
}

fn base_cases() -> Vec<(ShiftOp, NormalForm)> {
    let g = generators();
    let mut out = vec![
        (ShiftOp::IDENTITY, NormalForm { alpha: RationalFunc::one(), beta: RationalFunc::zero() }),
        (ShiftOp::Z, NormalForm { alpha: RationalFunc::zero(), beta: RationalFunc::one() }),
    ];
    let units = [
        (0, ShiftOp::A),
        (1, ShiftOp::B),
        (2, ShiftOp::C),
        (3, ShiftOp::A.inv()),
        (4, ShiftOp::B.inv()),
        (5, ShiftOp::C.inv()),
        (6, ShiftOp::Z.inv()),
    ];
    for (i, t) in units {
        out.push((t, solve_for(&g[i], t)));
    }
    // Z R_z involves 1, Z and Z^2.
    let zr = &DiffOperator::shift(ShiftOp::Z) * &g[6];
    let z2 = ShiftOp::Z.pow(2);
    out.push((z2, solve_for(&zr, z2)));
    out
}

/// The unit step peeled off first: along the first coordinate (in the order
/// `a, b, c, z`) of largest absolute value.
pub fn induction_step(x: &ShiftOp) -> ShiftOp {
    induction_step_in(x, StepOrder::Forward)
}

/// The unit step peeled off first under the given tie-breaking order.
pub fn induction_step_in(x: &ShiftOp, order: StepOrder) -> ShiftOp {
    let k = x.k();
    let mut best = 0;
    for i in 1..4 {
        let better = match order {
            StepOrder::Forward => k[i].abs() > k[best].abs(),
            StepOrder::Reverse => k[i].abs() >= k[best].abs(),
        };
        if better {
            best = i;
        }
    }
    let mut s = [0; 4];
    s[best] = k[best].signum();
    ShiftOp(s)
}

/// `X ≡ α + β Z`, memoized across calls.
pub fn normal_form(x: &ShiftOp) -> Arc<NormalForm> {
    normal_form_in(x, StepOrder::Forward)
}

/// `X ≡ α + β Z` computed along the given induction order. The result does
/// not depend on the order; the intermediate steps do.
pub fn normal_form_in(x: &ShiftOp, order: StepOrder) -> Arc<NormalForm> {
    if let Some(nf) = nf_table().lock().unwrap().get(&(order, *x)) {
        return nf.clone();
    }
    let s = induction_step_in(x, order);
    let y = *x * s.inv();
    let ny = normal_form_in(&y, order);
    let ns = normal_form_in(&s, order);
    let nz2 = normal_form_in(&ShiftOp::Z.pow(2), order);
    let say = s.apply(&ny.alpha);
    let sby = s.apply(&ny.beta);
    let zas = ShiftOp::Z.apply(&ns.alpha);
    let zbs = ShiftOp::Z.apply(&ns.beta);
    // S Y ≡ S(α_Y) S + S(β_Y) Z S, with S ≡ α_S + β_S Z and Z² ≡ α' + β' Z.
    let alpha = &(&say * &ns.alpha) + &(&(&sby * &zbs) * &nz2.alpha);
    let beta = &(&say * &ns.beta) + &(&sby * &(&zas + &(&zbs * &nz2.beta)));
    let nf = Arc::new(NormalForm { alpha, beta });
    match nf_table().lock().unwrap().entry((order, *x)) {
        Entry::Occupied(e) => e.get().clone(),
        Entry::Vacant(e) => e.insert(nf).clone(),
    }
}

/// Number of memoized normal forms.
pub fn normal_form_cache_size() -> usize {
    nf_table().lock().unwrap().len()
}

/// Clears `[r_1, ..., r_n]` to coprime polynomials with no common monomial
/// or integer content.
pub(crate) fn clear_common(rs: &[RationalFunc]) -> Vec<LaurentPoly> {
    let mut l = LaurentPoly::one();
    for r in rs {
        if !r.den().is_one() {
            l = poly_lcm(&l, r.den());
        }
    }
    let ps: Vec<LaurentPoly> =
        rs.iter().map(|r| (r.num() * &l).div_exact(r.den()).expect("lcm is a multiple")).collect();
    let nonzero: Vec<&LaurentPoly> = ps.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return ps;
    }
    let g = poly_gcd_many(nonzero.iter().copied()).normalize_unit();
    let mut out: Vec<LaurentPoly> =
        ps.iter().map(|p| if p.is_zero() { p.clone() } else { p.div_exact(&g).expect("gcd divides") }).collect();
    let mut mono = nonzero[0].min_monomial();
    for p in out.iter().filter(|p| !p.is_zero()) {
        mono = mono.meet(&p.min_monomial());
    }
    if !mono.is_one() {
        let inv = mono.inv();
        out = out.iter().map(|p| p.mul_monomial(&inv)).collect();
    }
    out
}

/// Polynomials `(p_x, p_z, p_1)` with `p_x X + p_z Z + p_1 ∈ I`, coprime
/// and with positive leading coefficient of `p_x`.
pub fn normal_form_to_z1(x: &ShiftOp) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    if x.is_identity() {
        return (LaurentPoly::one(), LaurentPoly::zero(), -LaurentPoly::one());
    }
    if *x == ShiftOp::Z {
        return (LaurentPoly::one(), -LaurentPoly::one(), LaurentPoly::zero());
    }
    let nf = normal_form(x);
    let v = clear_common(&[RationalFunc::one(), -&nf.beta, -&nf.alpha]);
    let mut it = v.into_iter();
    let (px, pz, p1) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    if px.leading_sign() < 0 {
        (-px, -pz, -p1)
    } else {
        (px, pz, p1)
    }
}

/// The relation `p_x X + p_z Z + p_1` as an operator.
pub fn normal_form_operator(x: &ShiftOp) -> DiffOperator {
    let (px, pz, p1) = normal_form_to_z1(x);
    DiffOperator::from_terms([(*x, px.into()), (ShiftOp::Z, pz.into()), (ShiftOp::IDENTITY, p1.into())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contiguous::verify::verify_annihilates;
    use crate::exactalg::parse_poly;

    #[test]
    fn base_cases_match_generators() {
        let nf = normal_form(&ShiftOp::A);
        assert_eq!(nf.alpha, crate::exactalg::parse_rf("1/(1-a)").unwrap());
        let (px, pz, p1) = normal_form_to_z1(&ShiftOp::A.inv());
        let expect = [
            parse_poly("q*(c-a)").unwrap(),
            parse_poly("a*(a*b*z-c)").unwrap(),
            parse_poly("-c*q+a*c+a*q-a^2*z").unwrap(),
        ];
        // Equal up to a common sign.
        let sign = if px == expect[0] { 1 } else { -1 };
        assert_eq!(px, expect[0].scale(&sign.into()));
        assert_eq!(pz, expect[1].scale(&sign.into()));
        assert_eq!(p1, expect[2].scale(&sign.into()));
    }

    #[test]
    fn trivial_cases() {
        let (px, pz, p1) = normal_form_to_z1(&ShiftOp::IDENTITY);
        assert!(px.is_one() && pz.is_zero() && p1 == -LaurentPoly::one());
    }

    #[test]
    fn induction_results_annihilate() {
        for x in ["A^2", "A B", "Z^2", "C^-1 Z", "A^-1 B C^2", "Z^-2"] {
            let d = normal_form_operator(&ShiftOp::parse(x).unwrap());
            assert!(verify_annihilates(&d, 24).unwrap(), "{x}");
        }
    }

    #[test]
    fn step_rule() {
        assert_eq!(induction_step(&ShiftOp::new(1, -2, 2, 0)), ShiftOp::B.inv());
        assert_eq!(induction_step(&ShiftOp::new(1, 0, 0, 1)), ShiftOp::A);
        assert_eq!(induction_step_in(&ShiftOp::new(1, -2, 2, 0), StepOrder::Reverse), ShiftOp::C);
        assert_eq!(induction_step_in(&ShiftOp::new(1, 0, 0, 1), StepOrder::Reverse), ShiftOp::Z);
    }

    #[test]
    fn orders_agree() {
        for x in ["A B", "A^-1 C Z", "B^2 Z^-1", "A C^-1"] {
            let x = ShiftOp::parse(x).unwrap();
            assert_eq!(*normal_form_in(&x, StepOrder::Forward), *normal_form_in(&x, StepOrder::Reverse));
        }
    }
}
