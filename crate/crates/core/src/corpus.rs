//! Bundled example algebras.

use std::sync::Arc;

use crate::algebra::{build_algebra, Algebra, BoundQuiver, Cut, DEFAULT_PATH_CAP};
use crate::error::{Error, Result};

pub const EX1_C: &str = include_str!("../corpus/ex1_c.json");
pub const EX2_C: &str = include_str!("../corpus/ex2_c.json");
pub const EX3_B: &str = include_str!("../corpus/ex3_b.json");
pub const EX3_CUTS: &str = include_str!("../corpus/ex3_cuts.json");
pub const A2: &str = include_str!("../corpus/a2.json");
pub const A3: &str = include_str!("../corpus/a3.json");
pub const A3_REL: &str = include_str!("../corpus/a3_rel.json");

/// Names and sources of the bundled bound quivers.
pub const QUIVERS: &[(&str, &str)] = &[
    ("ex1_c", EX1_C),
    ("ex2_c", EX2_C),
    ("ex3_b", EX3_B),
    ("a2", A2),
    ("a3", A3),
    ("a3_rel", A3_REL),
];

pub fn quiver(name: &str) -> Result<BoundQuiver> {
    let (_, text) = QUIVERS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Input(format!("no bundled algebra named {name:?}")))?;
    BoundQuiver::from_json(text)
}

pub fn algebra(name: &str) -> Result<Arc<Algebra>> {
    Ok(Arc::new(build_algebra(&quiver(name)?, DEFAULT_PATH_CAP)?))
}

#[derive(serde::Deserialize)]
struct CutFile {
    cuts: Vec<Cut>,
}

pub fn parse_cuts(text: &str) -> Result<Vec<Cut>> {
    Ok(serde_json::from_str::<CutFile>(text)?.cuts)
}

pub fn ex3_cuts() -> Vec<Cut> {
    parse_cuts(EX3_CUTS).expect("bundled cut file parses")
}
