//! Shift quotients of the second-solution prefactor at a random point.
use qheine::numerics::{rng_from_seed, sample_point, verify_g_ratios, EvalConfig};

fn main() -> qheine::Result<()> {
    let cfg = EvalConfig::default();
    let pt = sample_point(&mut rng_from_seed(3), cfg.precision);
    for r in verify_g_ratios(&pt, &cfg)?.ratios {
        println!("g({0})/g = {1}: rel err {2:.2e}", r.shift, r.expected, r.rel_err);
    }
    Ok(())
}
