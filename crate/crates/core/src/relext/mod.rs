//! The relation extension `B = C ⋉ E` with `E = Ext²_C(DC, C)`, and the
//! functors relating `mod C` and `mod B`.

mod bimodule;
mod context;
mod functors;

pub use bimodule::{compute_e, compute_e_unchecked, BiBasis, Bimodule};
pub use context::{
    context_from_cut, relation_extension, trivial_extension, Ambient, ExtensionContext,
};
