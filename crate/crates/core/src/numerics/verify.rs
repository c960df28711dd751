//! Pointwise verification of symmetries and prefactor identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::complex::Complex;
use super::eval::{eval_term, phi21, EvalConfig, EvalPoint};
use crate::error::{Error, Result};
use crate::exactalg::{parse_rf, Var};
use crate::paramgroup::ShiftOp;
use crate::qterm::{QHypTerm, Transformation};

fn disk(rng: &mut impl Rng, r_min: f64, r_max: f64, p: usize) -> Complex {
    let r = (r_min * r_min + (r_max * r_max - r_min * r_min) * rng.gen::<f64>()).sqrt();
    Complex::from_polar(r, rng.gen::<f64>() * std::f64::consts::TAU, p)
}

/// `a, b, c` in the disk of radius 0.9 (away from 0 and 1), `|q|` in
/// `[0.2, 0.6]`, `|z| < 0.5`.
pub fn sample_point(rng: &mut impl Rng, p: usize) -> EvalPoint {
    loop {
        let a = disk(rng, 0.05, 0.9, p);
        let b = disk(rng, 0.05, 0.9, p);
        let c = disk(rng, 0.05, 0.9, p);
        let z = disk(rng, 0.05, 0.5, p);
        let q = disk(rng, 0.2, 0.6, p);
        let one = Complex::one(p);
        if [&a, &b, &c, &z].iter().all(|x| (&one - *x).abs_f64() > 0.05) {
            return EvalPoint::new([a, b, c, z, q]);
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub samples: usize,
    pub resamples: usize,
    pub max_rel_err: f64,
    pub passed: bool,
}

/// Largest `|z|` allowed after transforming a sample point.
const Z_LIMIT: f64 = 0.95;

/// Compares `φ(p)` with `f(p) φ(L^{-1} p)` at random points. Points whose
/// image leaves the convergence region, or hits a pole, are redrawn.
pub fn verify_symmetry(t: &Transformation, samples: usize, cfg: &EvalConfig, seed: u64) -> Result<SymmetryReport> {
    cfg.validate()?;
    let mut rng = rng_from_seed(seed);
    let mut resamples = 0;
    let mut max_err = 0f64;
    let mut done = 0;
    while done < samples {
        if resamples > 200 * samples.max(1) {
            return Err(Error::Domain("too many sample points fell outside the convergence region".into()));
        }
        let pt = sample_point(&mut rng, cfg.precision);
        let img = pt.transformed(&t.mat);
        if img.get(Var::Z).abs_f64() >= Z_LIMIT {
            resamples += 1;
            continue;
        }
        let rhs = eval_term(&t.term, &pt, cfg).and_then(|f| Ok(&f * &phi21(&img, cfg)?));
        let (lhs, rhs) = match (phi21(&pt, cfg), rhs) {
            (Ok(l), Ok(r)) => (l, r),
            _ => {
                resamples += 1;
                continue;
            }
        };
        max_err = max_err.max(rhs.rel_err(&lhs));
        done += 1;
    }
    Ok(SymmetryReport { samples, resamples, max_rel_err: max_err, passed: max_err < cfg.tol })
}

#[derive(Clone, Debug, Serialize)]
pub struct GRatio {
    pub shift: String,
    pub expected: String,
    pub rel_err: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GRatioReport {
    pub ratios: Vec<GRatio>,
    pub passed: bool,
}

/// The shift quotients of the second-solution prefactor.
pub const G_RATIOS: [(&str, &str); 4] =
    [("A", "(c-a*q)/(c*(1-a))"), ("B", "(c-b*q)/(c*(1-b))"), ("C", "c*(c-q)*(1-c)/(z*(c-a)*(c-b))"), ("Z", "q/c")];

/// Evaluates `X(g)/g` directly and compares with the rational values.
pub fn verify_g_ratios(pt: &EvalPoint, cfg: &EvalConfig) -> Result<GRatioReport> {
    let g = QHypTerm::second_solution_prefactor();
    let base = eval_term(&g, pt, cfg)?;
    let mut ratios = Vec::new();
    for (x, r) in G_RATIOS {
        let s = ShiftOp::parse(x)?;
        let got = &eval_term(&g, &pt.shifted(&s), cfg)? / &base;
        let want = pt.eval_rf(&parse_rf(r)?)?;
        ratios.push(GRatio { shift: x.into(), expected: r.into(), rel_err: got.rel_err(&want) });
    }
    let passed = ratios.iter().all(|r| r.rel_err < cfg.tol);
    Ok(GRatioReport { ratios, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heine_holds() {
        let r = verify_symmetry(&Transformation::heine(), 5, &EvalConfig::default(), 7).unwrap();
        assert!(r.passed, "{r:?}");
        let id = verify_symmetry(&Transformation::identity(), 3, &EvalConfig::default(), 7).unwrap();
        assert_eq!(id.max_rel_err, 0.0);
    }

    #[test]
    fn wrong_prefactor_fails() {
        let t = Transformation::new(QHypTerm::one(), Transformation::heine().mat);
        assert!(!verify_symmetry(&t, 3, &EvalConfig::default(), 1).unwrap().passed);
    }

    #[test]
    fn g_ratios_at_a_point() {
        let mut rng = rng_from_seed(3);
        let pt = sample_point(&mut rng, 128);
        let r = verify_g_ratios(&pt, &EvalConfig::default()).unwrap();
        assert!(r.passed, "{r:?}");
    }
}
