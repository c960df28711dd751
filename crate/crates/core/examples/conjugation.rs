//! Transporting operators along a symmetry.
use qheine::contiguous::{generators, ideal_membership};
use qheine::diffop::conjugate_op;
use qheine::qterm::Transformation;

fn main() -> qheine::Result<()> {
    let pa = &generators()[0];
    for (name, t) in [("heine", Transformation::heine()), ("swap", Transformation::swap_ab())] {
        let d = conjugate_op(&t, pa);
        println!("{name}: {d}");
        println!("  still in ideal: {}", ideal_membership(&d)?);
    }
    Ok(())
}
