//! Classification of the symmetries of the series: candidate shifts, the
//! factorization filter and the group they generate.

mod candidates;
mod filter;
mod group;

pub use candidates::{
    canonical, canonical_representatives, compare_with_listing, enumerate_candidates, satisfies_inequalities,
    symmetry_orbit, TableComparison, LISTED_ROWS,
};
pub use filter::{
    expected_survivors, filter_candidate, quotient_invariance, run_classification, witness, z_quotient,
    ClassificationReport, Timings, Witness,
};
pub use group::{generated_group, heine_group, GroupElement};
