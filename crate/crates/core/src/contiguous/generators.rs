//! The seven basic operators annihilating the hypergeometric series.

use crate::diffop::DiffOperator;

pub const GENERATOR_NAMES: [&str; 7] = ["P_a", "P_b", "P_c", "Q_a", "Q_b", "Q_c", "R_z"];

const TABLE: [&[(&str, &str)]; 7] = [
    &[("A", "1-a"), ("1", "-1"), ("Z", "a")],
    &[("B", "1-b"), ("1", "-1"), ("Z", "b")],
    &[("C", "z*(c-b)*(c-a)"), ("1", "(c-1)*(c^2+a*b*z-(a+b)*c*z)"), ("Z", "-(c-1)*c*(c-a*b*z)")],
    &[("1", "-c*q+a*c+a*q-a^2*z"), ("Z", "a*(a*b*z-c)"), ("A^-1", "q*(c-a)")],
    &[("1", "-c*q+b*c+b*q-b^2*z"), ("Z", "b*(a*b*z-c)"), ("B^-1", "q*(c-b)")],
    &[("1", "-q"), ("Z", "c"), ("C^-1", "q-c")],
    &[("1", "-(c+q-a*z-b*z)"), ("Z^-1", "q-z"), ("Z", "c-a*b*z")],
];

/// `P_a, P_b, P_c, Q_a, Q_b, Q_c, R_z` in this order.
pub fn generators() -> Vec<DiffOperator> {
    TABLE.iter().map(|t| DiffOperator::parse_terms(t).expect("generator table parses")).collect()
}

pub fn generator(name: &str) -> Option<DiffOperator> {
    let i = GENERATOR_NAMES.iter().position(|n| *n == name)?;
    Some(DiffOperator::parse_terms(TABLE[i]).expect("generator table parses"))
}

/// `ABC + (1-c)/(z(1-a)(1-b)) (Z - 1)`, which lies in the ideal but has a
/// coefficient with a pole at `z = 0`.
pub fn abc_relation() -> DiffOperator {
    DiffOperator::parse_terms(&[("A B C", "1"), ("Z", "(1-c)/(z*(1-a)*(1-b))"), ("1", "-(1-c)/(z*(1-a)*(1-b))")])
        .expect("relation parses")
}
