//! Reducing shifts to the basis {1, Z}.
use qheine::contiguous::{normal_form, normal_form_cache_size, normal_form_to_z1};
use qheine::paramgroup::ShiftOp;

fn main() -> qheine::Result<()> {
    for s in ["A", "C^-1", "A B", "Z^2"] {
        let x = ShiftOp::parse(s)?;
        let nf = normal_form(&x);
        println!("{x} ≡ ({}) + ({}) Z", nf.alpha, nf.beta);
        let (px, pz, p1) = normal_form_to_z1(&x);
        println!("  cleared: ({px})·X + ({pz})·Z + ({p1})");
    }
    println!("memoized forms: {}", normal_form_cache_size());
    Ok(())
}
