//! High-precision numerical check of every group element.
use qheine::classify::heine_group;
use qheine::numerics::{verify_symmetry, EvalConfig};

fn main() -> qheine::Result<()> {
    let cfg = EvalConfig::default();
    for e in heine_group()? {
        let r = verify_symmetry(&e.transformation, 5, &cfg, 7)?;
        let w = if e.word.is_empty() { "1" } else { &e.word };
        println!("{w:>14}: max rel err {:.2e} ({} resamples)", r.max_rel_err, r.resamples);
    }
    Ok(())
}
