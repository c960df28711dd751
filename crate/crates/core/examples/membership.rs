//! Ideal membership of arbitrary operators.
use qheine::contiguous::{generators, ideal_membership, ideal_membership_nf};
use qheine::diffop::DiffOperator;
use qheine::exactalg::parse_rf;
use qheine::paramgroup::ShiftOp;

fn main() -> qheine::Result<()> {
    let g = generators();
    // A left combination of generators is a member.
    let combo = &(&DiffOperator::shift(ShiftOp::B) * &g[0]) + &g[3].scale_left(&parse_rf("a*z")?);
    println!("B·P_a + az·Q_a in ideal: {}", ideal_membership(&combo)?);
    let not = DiffOperator::parse_terms(&[("A", "1"), ("1", "-1")])?;
    println!("A - 1 in ideal: {} (normal-form check: {})", ideal_membership(&not)?, ideal_membership_nf(&not));
    println!("{}", serde_json::to_string(&not).unwrap());
    Ok(())
}
