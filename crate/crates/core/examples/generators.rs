//! The seven generating q-contiguous relations and their series check.
use qheine::contiguous::{generators, verify_by_expansion, verify_report, GENERATOR_NAMES};

fn main() -> qheine::Result<()> {
    for (name, g) in GENERATOR_NAMES.iter().zip(generators()) {
        let r = verify_report(&g, 16)?;
        let expanded = verify_by_expansion(&g, 8)?;
        println!("{name} = {g}");
        println!("  closed form: {}, expansion to z^8: {expanded}", r.passed);
    }
    Ok(())
}
