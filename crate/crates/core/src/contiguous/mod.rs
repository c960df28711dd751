//! The annihilating ideal of the basic hypergeometric series: generators,
//! series verification, normal forms, three-term relations and membership.

mod divisibility;
mod generators;
mod normal_form;
mod relation;
pub mod series;
mod verify;

pub use divisibility::{divisibility_pattern, DivisibilityClaim, DivisibilityReport};
pub use generators::{abc_relation, generator, generators, GENERATOR_NAMES};
pub use normal_form::{
    induction_step, induction_step_in, normal_form, normal_form_cache_size, normal_form_in, normal_form_operator,
    normal_form_to_z1, NormalForm, StepOrder,
};
pub use relation::{
    ideal_membership, ideal_membership_nf, three_term, three_term_in, three_term_pivot, ThreeTermRelation,
};
pub use series::{FormalSeries, SeriesCoeff};
pub use verify::{verify_annihilates, verify_by_expansion, verify_report, Verification};

/// Default truncation order for series checks.
pub const DEFAULT_TRUNCATION: usize = 24;
