//! Exact computation of Heegaard Floer dimensions of Dehn surgeries on
//! knots, and covering-space obstructions between such surgeries.
//!
//! The library works from finite invariant profiles (genus, nu, and the
//! dimensions of the hook-complex homologies H(A_s)) and evaluates the
//! rational surgery formula with exact integer arithmetic. On top of the
//! per-surgery dimension tables it decides four covering obstructions,
//! each returning a re-checkable certificate, and verifies the classical
//! lens-space cover families where genuine covers exist.
//!
//! Everything is pure and deterministic; see the `floercover` binary for
//! the command-line surface.

pub mod arith;
pub mod error;
pub mod lens;
pub mod obstruction;
pub mod phi;
pub mod profile;
pub mod slope;
pub mod surgery;
pub mod survey;

pub use error::{Error, Result};
pub use lens::{
    cyclic_cover, lens_homeomorphic, moser_trefoil, verify_trefoil_family, LensSpace, Sign,
    TrefoilFamilyRecord,
};
pub use obstruction::{
    dimension_gap, obstruct_all, obstruct_by_dimension_gap, obstruct_lspace_cover,
    obstruct_lspace_knots, obstruct_same_knot, Certificate, CoverQuery, ObstructionVerdict,
    Status,
};
pub use phi::{phi, phi_bounds, phi_bruteforce, phi_window_sum};
pub use profile::{
    big_s, builtin, load_profiles, lspace_knot_profile, parse_profiles, serialize_profiles,
    unknot, CoefficientNote, KnotProfile, ValidationReport, Violation,
};
pub use slope::{SpincClass, SurgerySlope};
pub use surgery::{hf_dim, hf_table, is_zrz_lspace_surgery, HFDimTable};
pub use survey::{
    emit_report, parse_job, parse_report, run_survey, CheckKind, CheckOutcome, ReportFormat,
    ReportHeader, ResolvedJob, SlopeRange, SurveyJob, SurveyRow,
};
