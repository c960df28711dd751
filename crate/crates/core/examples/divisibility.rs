//! Forced binomial factors in relation coefficients.
use qheine::contiguous::{divisibility_pattern, three_term};
use qheine::paramgroup::ShiftOp;

fn main() -> qheine::Result<()> {
    let rel = three_term(ShiftOp::A.pow(2), ShiftOp::Z, ShiftOp::A.inv())?;
    let rep = divisibility_pattern(&rel)?;
    for c in &rep.claims {
        println!("{} - q^{} | p_{}: expected {}, observed {}", c.var, -c.j, c.coeff, c.expected, c.observed);
    }
    println!("all hold: {}", rep.all_hold());
    Ok(())
}
