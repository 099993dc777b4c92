//! Homological functors: duality, transpose, `τ`, `τ⁻¹`, the Nakayama
//! functor, resolutions and Ext.

mod ar;
mod nakayama;
mod projmap;
mod resolution;

pub use ar::{d_tr, dualize, presentation_map, tau, tau_inverse, tr_d, transpose};
pub use nakayama::{nakayama, nakayama_inverse};
pub use projmap::ProjMap;
pub use resolution::{
    ext_dim, ext_dim_injective, ext_projective, ext_right_module, hom_into, hom_space_dim,
    lift_morphism, lift_through, projective_resolution, Cohomology, ProjResolution,
};
