//! Exact truncated series and operator application.
use qheine::contiguous::generators;
use qheine::contiguous::series::FormalSeries;
use qheine::diffop::apply_to_series;

fn main() -> qheine::Result<()> {
    let s = FormalSeries::phi21(3);
    for (n, c) in s.coeffs().iter().enumerate() {
        println!("z^{n}: {c}");
    }
    let out = apply_to_series(&generators()[0], &FormalSeries::phi21(10), 10)?;
    println!("P_a applied, zero through z^10: {}", out.is_zero());
    Ok(())
}
