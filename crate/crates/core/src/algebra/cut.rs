//! Admissible cuts: grading a bound quiver by declaring a set of arrows to
//! have degree one and taking the degree-zero subalgebra.

use serde::{Deserialize, Serialize};

use super::build::build_algebra;
use super::quiver::{BoundQuiver, Quiver, Relation};
use super::Algebra;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    #[serde(default)]
    pub name: String,
    pub arrows: Vec<String>,
}

/// The degree-zero part of a cut presentation.
#[derive(Clone, Debug)]
pub struct CutAlgebra {
    pub cut: Cut,
    pub quiver: BoundQuiver,
    pub algebra: Algebra,
}

fn degree(path: &[usize], cut: &[bool]) -> usize {
    path.iter().filter(|&&a| cut[a]).count()
}

pub fn apply_cut(bq: &BoundQuiver, cut: &Cut, cap: usize) -> Result<CutAlgebra> {
    let q = &bq.quiver;
    let mut in_cut = vec![false; q.arrows.len()];
    for name in &cut.arrows {
        let a = q
            .arrow_index(name)
            .ok_or_else(|| Error::Input(format!("cut arrow {name:?} is not in the quiver")))?;
        in_cut[a] = true;
    }
    for rel in &bq.relations {
        let d0 = degree(&rel.terms[0].1, &in_cut);
        if rel.terms.iter().any(|(_, p)| degree(p, &in_cut) != d0) {
            let shown: Vec<String> = rel
                .terms
                .iter()
                .map(|(c, p)| {
                    let names: Vec<&str> = p.iter().map(|&a| q.arrows[a].name.as_str()).collect();
                    format!("{c}·{}", names.join(""))
                })
                .collect();
            return Err(Error::NonHomogeneousCut(format!(
                "relation {} mixes degrees",
                shown.join(" + ")
            )));
        }
    }

    let keep: Vec<usize> = (0..q.arrows.len()).filter(|&a| !in_cut[a]).collect();
    let remap = |a: usize| keep.iter().position(|&k| k == a).unwrap();
    let sub = Quiver {
        vertices: q.vertices.clone(),
        arrows: keep.iter().map(|&a| q.arrows[a].clone()).collect(),
    };
    if sub.has_oriented_cycle() {
        return Err(Error::NonHomogeneousCut(
            "the degree-zero quiver still contains an oriented cycle".into(),
        ));
    }
    let relations = bq
        .relations
        .iter()
        .filter(|r| degree(&r.terms[0].1, &in_cut) == 0)
        .map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.iter().map(|&a| remap(a)).collect()))
                .collect(),
        })
        .collect();
    let quiver = BoundQuiver {
        field: bq.field,
        quiver: sub,
        relations,
    };
    let algebra = build_algebra(&quiver, cap)?;
    Ok(CutAlgebra {
        cut: cut.clone(),
        quiver,
        algebra,
    })
}
