//! Injective presentations of induced modules: the term construction, the
//! multiset oracle, explicit certificates, Gorenstein tables and iterated
//! resolutions.

mod certificate;
mod iterate;
mod pipeline;
mod terms;

pub use certificate::{
    build_certificate, oracle_verify, oracle_verify_projective, Certificate, OracleVerdict, Ranks,
};
pub use iterate::{iterate_resolution, ResolutionTrace, StopReason, TraceStep};
pub use pipeline::{
    dual_presentation, ext1_cokernel_check, gorenstein_report, present,
    projective_injective_resolution, DualPresentation, Ext1Report, GorensteinRow, Presentation,
};
pub use terms::{
    nu_inverse_module, nu_module, theorem_terms, tilde_injective, Clause, TheoremTerms,
};
