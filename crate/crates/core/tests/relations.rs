//! Three-term relations and ideal membership.

use qheine::contiguous::{
    generators, ideal_membership, ideal_membership_nf, normal_form_operator, three_term, three_term_in,
    three_term_pivot, verify_annihilates, verify_by_expansion, StepOrder,
};
use qheine::diffop::DiffOperator;
use qheine::exactalg::{parse_poly, parse_rf};
use qheine::paramgroup::ShiftOp;

fn s(x: &str) -> ShiftOp {
    ShiftOp::parse(x).unwrap()
}

#[test]
fn first_relation_is_pa() {
    let rel = three_term(ShiftOp::A, ShiftOp::IDENTITY, ShiftOp::Z).unwrap();
    assert_eq!(rel.coeffs[0], parse_poly("1-a").unwrap());
    assert_eq!(rel.coeffs[1], parse_poly("-1").unwrap());
    assert_eq!(rel.coeffs[2], parse_poly("a").unwrap());
}

#[test]
fn symbolic_and_expanded_checks_agree() {
    for t in [["A", "B", "Z"], ["C", "1", "A^-1"], ["A B", "Z^-1", "C^-1"]] {
        let rel = three_term(s(t[0]), s(t[1]), s(t[2])).unwrap();
        let d = rel.to_operator();
        assert!(verify_annihilates(&d, 24).unwrap());
        assert!(verify_by_expansion(&d, 10).unwrap(), "{t:?}");
    }
}

#[test]
fn elimination_routes_agree() {
    for t in [["A", "B", "Z"], ["C^-1", "1", "A Z"], ["B^2", "Z", "A^-1"]] {
        let [x1, x2, x3] = t.map(s);
        let a = three_term(x1, x2, x3).unwrap();
        assert_eq!(three_term_in(x1, x2, x3, StepOrder::Reverse).unwrap(), a, "{t:?}");
        assert_eq!(three_term_pivot(x1, x2, x3).unwrap(), a, "{t:?}");
    }
}

#[test]
fn perturbed_relations_fail() {
    let rel = three_term(s("A"), s("B"), s("C")).unwrap();
    let mut d = rel.to_operator();
    d.add_term(s("A"), parse_rf("q").unwrap());
    assert!(!verify_annihilates(&d, 24).unwrap());
    assert!(!ideal_membership(&d).unwrap());
    assert!(!verify_by_expansion(&d, 8).unwrap());
}

#[test]
fn membership_methods_agree() {
    let g = generators();
    let combos = [
        &(&DiffOperator::shift(s("A")) * &g[1]) + &g[2],
        &g[6].scale_left(&parse_rf("z/(1-c)").unwrap()) - &(&DiffOperator::shift(s("C^-1")) * &g[0]),
        normal_form_operator(&s("A B^-1 Z")),
        DiffOperator::parse_terms(&[("A", "1"), ("B", "-1")]).unwrap(),
        DiffOperator::parse_terms(&[("A", "1-a"), ("1", "-1"), ("Z", "a*q")]).unwrap(),
    ];
    let expect = [true, true, true, false, false];
    for (d, e) in combos.iter().zip(expect) {
        assert_eq!(ideal_membership(d).unwrap(), e, "{d}");
        assert_eq!(ideal_membership_nf(d), e, "{d}");
        assert_eq!(verify_annihilates(d, 24).unwrap(), e, "{d}");
    }
}
