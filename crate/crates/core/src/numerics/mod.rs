//! High-precision numerical evaluation and pointwise identity checks.

mod complex;
mod eval;
mod verify;

pub use complex::{big_to_f64, rational_to_big, Complex};
pub use eval::{eval_term, phi21, qpoch_inf, theta, EvalConfig, EvalPoint};
pub use verify::{
    rng_from_seed, sample_point, verify_g_ratios, verify_symmetry, GRatio, GRatioReport, SymmetryReport, G_RATIOS,
};
