//! The candidate filter and its symmetry properties.

use qheine::classify::{enumerate_candidates, filter_candidate, run_classification, symmetry_orbit};
use qheine::contiguous::three_term;
use qheine::diffop::conjugate_op;
use qheine::paramgroup::{conjugate_shift, ShiftOp};
use qheine::qterm::Transformation;

#[test]
fn filter_agrees_on_inverse_pairs() {
    for y in enumerate_candidates() {
        let (p, _) = filter_candidate(&y).unwrap();
        let (q, _) = filter_candidate(&y.inv()).unwrap();
        assert_eq!(p, q, "{y}");
    }
}

#[test]
fn survivors_are_linked_by_heine() {
    // L_h carries Z to B C, which is how the second survivor arises.
    let lh = Transformation::heine().mat;
    let img = conjugate_shift(&lh, &ShiftOp::Z);
    let expect = ShiftOp::new(0, 1, 1, 0);
    assert!(img == expect || img == expect.inv(), "{img}");
    let swapped = conjugate_shift(&Transformation::swap_ab().mat, &expect);
    assert_eq!(swapped, ShiftOp::new(1, 0, 1, 0));
}

#[test]
fn z_survives_and_its_relation_is_rz_like() {
    let (pass, w) = filter_candidate(&ShiftOp::Z).unwrap();
    assert!(pass);
    assert!(!w.is_zero());
    let rel = three_term(ShiftOp::Z, ShiftOp::IDENTITY, ShiftOp::Z.inv()).unwrap();
    let conj = conjugate_op(&Transformation::swap_ab(), &rel.to_operator());
    assert_eq!(conj, rel.to_operator());
}

#[test]
fn orbits_respect_candidates() {
    let cands: Vec<[i32; 4]> = enumerate_candidates().iter().map(|s| s.0).collect();
    // Inversion and a <-> b preserve the inequalities; the listing's sign
    // flip of k_a does not, and only serves to shorten the table.
    for c in &cands {
        let [a, b, cc, z] = *c;
        assert!(cands.contains(&[-a, -b, -cc, -z]));
        assert!(cands.contains(&[b, a, cc, z]));
        assert!(symmetry_orbit(c).contains(c));
    }
    let r = run_classification().unwrap();
    assert_eq!(r.witnesses.len(), cands.len());
}
