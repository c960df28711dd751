//! Ring structure of the operator algebra and its symmetry action.

use proptest::prelude::*;

use qheine::classify::heine_group;
use qheine::contiguous::{generators, ideal_membership, three_term};
use qheine::diffop::{conjugate_op, DiffOperator};
use qheine::exactalg::parse_rf;
use qheine::paramgroup::{ParamMatrix, ShiftOp};
use qheine::qterm::{QHypTerm, Transformation};

const COEFFS: [&str; 6] = ["1", "a", "1-b*z", "c/(1-a)", "q*z-c", "(a-b)/(c-q)"];

fn shift() -> impl Strategy<Value = ShiftOp> {
    prop::array::uniform4(-1i32..=1).prop_map(ShiftOp)
}

fn operator() -> impl Strategy<Value = DiffOperator> {
    prop::collection::vec((shift(), 0..COEFFS.len()), 1..3)
        .prop_map(|ts| DiffOperator::from_terms(ts.into_iter().map(|(s, i)| (s, parse_rf(COEFFS[i]).unwrap()))))
}

fn element() -> impl Strategy<Value = Transformation> {
    let g = heine_group().unwrap();
    (0..g.len()).prop_map(move |i| g[i].transformation.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn operator_ring_axioms(x in operator(), y in operator(), z in operator()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&DiffOperator::one() * &x, x.clone());
    }

    #[test]
    fn conjugation_is_an_automorphism(t in element(), x in operator(), y in operator()) {
        prop_assert_eq!(conjugate_op(&t, &(&x * &y)), &conjugate_op(&t, &x) * &conjugate_op(&t, &y));
        prop_assert_eq!(conjugate_op(&t, &(&x + &y)), &conjugate_op(&t, &x) + &conjugate_op(&t, &y));
    }

    #[test]
    fn conjugation_composes(s in element(), t in element(), x in operator()) {
        let nested = conjugate_op(&s, &conjugate_op(&t, &x));
        prop_assert_eq!(conjugate_op(&s.multiply(&t), &x), nested);
    }

    #[test]
    fn operator_json_round_trip(x in operator()) {
        let s = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<DiffOperator>(&s).unwrap(), x);
    }
}

#[test]
fn symmetries_preserve_the_ideal() {
    for e in heine_group().unwrap() {
        for g in generators() {
            assert!(ideal_membership(&conjugate_op(&e.transformation, &g)).unwrap(), "{}", e.word);
        }
    }
}

#[test]
fn json_round_trips() {
    let m = ParamMatrix::heine();
    let s = serde_json::to_string(&m).unwrap();
    assert_eq!(serde_json::from_str::<ParamMatrix>(&s).unwrap(), m);
    let t = Transformation::heine();
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<Transformation>(&s).unwrap(), t);
    let f = QHypTerm::second_solution_prefactor();
    let s = serde_json::to_string(&f).unwrap();
    assert_eq!(serde_json::from_str::<QHypTerm>(&s).unwrap(), f);
    let rel = three_term(ShiftOp::A, ShiftOp::B, ShiftOp::Z).unwrap();
    let s = serde_json::to_string(&rel).unwrap();
    assert_eq!(serde_json::from_str::<qheine::contiguous::ThreeTermRelation>(&s).unwrap(), rel);
}

#[test]
fn shift_parse_display_round_trip() {
    for k in [[0, 0, 0, 0], [1, -2, 0, 3], [0, 0, -1, 1]] {
        let s = ShiftOp(k);
        assert_eq!(ShiftOp::parse(&s.to_string()).unwrap(), s);
    }
}
