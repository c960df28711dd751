//! The factorization filter on `g Y(g) / (f Y(h))`.
//!
//! For `f Y + g + h Y^{-1}` in the ideal and a transformation `pL` fixing
//! the series with `L^{-1} Z L = Y`, the quotient above maps under `L` to a
//! fixed rational function whose denominator is a monomial times two
//! binomials. Monomial substitutions preserve that shape, so a candidate
//! survives only if its own denominator has it.

use std::time::Instant;

use serde::Serialize;

use super::candidates::{
    canonical, canonical_representatives, compare_with_listing, enumerate_candidates, TableComparison,
};
use crate::contiguous::three_term;
use crate::error::{Error, Result};
use crate::exactalg::{binomial_pair_factor, parse_rf, rf_latex, RationalFunc};
use crate::paramgroup::{act_on_function, conjugate_shift, ParamMatrix, ShiftOp};

/// `(az+bz-c-q)(aqz+bqz-c-q) / ((c-abz) q (1-z))`, built from the
/// coefficients of `R_z`. Symmetries that fix `Z` must leave it unchanged.
pub fn z_quotient() -> RationalFunc {
    parse_rf("(a*z+b*z-c-q)*(a*q*z+b*q*z-c-q)/((c-a*b*z)*q*(1-z))").expect("fixed expression")
}

/// `g Y(g) / (f Y(h))` for the relation `f Y + g + h Y^{-1}`.
pub fn witness(y: &ShiftOp) -> Result<RationalFunc> {
    if y.is_identity() {
        return Err(Error::Precondition("the candidate shift must not be the identity".into()));
    }
    let rel = three_term(*y, ShiftOp::IDENTITY, y.inv())?;
    let [f, g, h] = rel.coeffs.map(RationalFunc::from_poly);
    Ok(&(&g * &y.apply(&g)) / &(&f * &y.apply(&h)))
}

/// Whether the witness denominator is a monomial times two binomials.
pub fn filter_candidate(y: &ShiftOp) -> Result<(bool, RationalFunc)> {
    let w = witness(y)?;
    Ok((binomial_pair_factor(w.den()).is_some(), w))
}

/// True iff `L` leaves the quotient invariant. Requires `L Z L^{-1} = Z`.
pub fn quotient_invariance(l: &ParamMatrix) -> Result<bool> {
    if conjugate_shift(l, &ShiftOp::Z) != ShiftOp::Z {
        return Err(Error::Precondition("the matrix does not fix Z under conjugation".into()));
    }
    let lhs = z_quotient();
    Ok(act_on_function(l, &lhs) == lhs)
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub shift: [i32; 4],
    pub pass: bool,
    pub denominator_terms: usize,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
    pub per_candidate_ms: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub candidates: Vec<[i32; 4]>,
    /// Surviving shifts, one of each pair `{Y, Y^{-1}}`.
    pub survivors: Vec<[i32; 4]>,
    pub witnesses: Vec<Witness>,
    pub timings: Timings,
    pub canonical: Vec<[i32; 4]>,
    pub table: TableComparison,
}

impl ClassificationReport {
    pub fn passed(&self, y: &[i32; 4]) -> Option<bool> {
        self.witnesses.iter().find(|w| w.shift == *y).map(|w| w.pass)
    }

    /// LaTeX table of the canonical candidates with the filter outcome.
    pub fn latex_table(&self) -> String {
        let mut s =
            String::from("\\begin{tabular}{cccc|c|c}\n$k_a$ & $k_b$ & $k_c$ & $k_z$ & terms & survives\\\\\n\\hline\n");
        for k in &self.canonical {
            let w = self.witnesses.iter().find(|w| canonical(&w.shift) == *k).expect("every class has a candidate");
            s.push_str(&format!(
                "{} & {} & {} & {} & {} & {}\\\\\n",
                k[0],
                k[1],
                k[2],
                k[3],
                w.denominator_terms,
                if w.pass { "yes" } else { "no" }
            ));
        }
        s.push_str("\\end{tabular}\n");
        s
    }

    /// LaTeX rendering of a single witness.
    pub fn witness_latex(&self, y: &[i32; 4]) -> Option<String> {
        let w = self.witnesses.iter().find(|w| w.shift == *y)?;
        parse_rf(&w.witness).ok().map(|r| rf_latex(&r))
    }
}

/// Runs the filter over every candidate.
pub fn run_classification() -> Result<ClassificationReport> {
    let start = Instant::now();
    let cands = enumerate_candidates();
    let mut witnesses = Vec::new();
    let mut per = Vec::new();
    for y in &cands {
        let t = Instant::now();
        let (pass, w) = filter_candidate(y)?;
        per.push(t.elapsed().as_secs_f64() * 1e3);
        witnesses.push(Witness { shift: y.0, pass, denominator_terms: w.den().len(), witness: w.to_string() });
    }
    let mut survivors: Vec<[i32; 4]> =
        witnesses.iter().filter(|w| w.pass).map(|w| std::cmp::max(w.shift, ShiftOp(w.shift).inv().0)).collect();
    survivors.sort();
    survivors.dedup();
    Ok(ClassificationReport {
        candidates: cands.iter().map(|s| s.0).collect(),
        survivors,
        witnesses,
        timings: Timings { total_ms: start.elapsed().as_secs_f64() * 1e3, per_candidate_ms: per },
        canonical: canonical_representatives(&cands),
        table: compare_with_listing(&cands),
    })
}

/// `{Z, AC, BC}` as shift vectors, sorted.
pub fn expected_survivors() -> Vec<[i32; 4]> {
    let mut v = vec![[0, 0, 0, 1], [1, 0, 1, 0], [0, 1, 1, 0]];
    v.sort();
    v
}
