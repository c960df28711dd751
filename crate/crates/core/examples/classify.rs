//! Which shifts Y can map the second solution to a multiple of itself.
use qheine::classify::run_classification;
use qheine::paramgroup::ShiftOp;

fn main() -> qheine::Result<()> {
    let r = run_classification()?;
    println!("{} candidates in {:.0} ms", r.candidates.len(), r.timings.total_ms);
    for y in &r.survivors {
        println!("survivor {}: {}", ShiftOp(*y), r.witness_latex(y).unwrap_or_default());
    }
    let t = &r.table;
    println!(
        "listing: duplicates {:?}, not solutions {:?}, missing {:?}",
        t.duplicates, t.not_solutions, t.missing_classes
    );
    Ok(())
}
