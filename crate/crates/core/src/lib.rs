//! Exact computations with bound quiver algebras, their modules, and
//! relation extensions `B = C ⋉ Ext²_C(DC, C)`.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod exactlin;
pub mod homfun;
pub mod io;
pub mod modrep;
pub mod present;
pub mod relext;
pub mod report;
pub mod selftest;

pub use error::{Error, Result};
