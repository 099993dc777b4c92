//! The category of finite-dimensional right modules.

mod envelope;
mod hom;
mod iso;
mod module;
mod rep;
mod standard;

pub use envelope::{
    cosyzygy, cosyzygy_n, decompose_injective, decompose_projective, global_dimension,
    injective_dimension, injective_envelope, is_injective, is_projective, map_from_projective,
    map_to_injective, min_inj_presentation, min_proj_presentation, multiplicities_to_vertices,
    projective_cover, projective_dimension, require_gldim_two, syzygy, syzygy_n,
    vertices_to_multiplicities, Dimension, InjMap, InjPresentation, ProjCover, ProjPresentation,
};
pub use hom::{cokernel, copair, hom_basis, hom_dim, image, kernel, sum_inclusion, sum_projection};
pub(crate) use iso::random_combination;
pub use iso::{
    are_isomorphic, are_isomorphic_with, is_indecomposable, Indecomposability, IsoVerdict,
    DEFAULT_ISO_TRIALS,
};
pub use module::{Module, Morphism};
pub use rep::{generator_matrices, module_from_rep};
pub use standard::{
    dual_regular, injective, injective_socle_index, injective_sum, projective, projective_sum,
    projective_top_index, regular,
};
