//! Maps between sums of indecomposable projectives in symbolic form.
//!
//! For `f: ⊕_r P(v_r) → ⊕_s P(w_s)` the entry `entries[r][s]` is the element
//! `a ∈ e_{w_s} A e_{v_r}` with `f(e_{v_r}) = Σ_s e_{w_s}·a` on the `s`-th
//! summand.

use std::sync::Arc;

use crate::algebra::{elem_add, Algebra, Elem};
use crate::exactlin::Mat;
use crate::modrep::{projective_sum, projective_top_index, Module, Morphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Elem>>,
}

/// Row offsets of each summand inside the vertex-`u` part of `⊕ P(v)`.
pub(crate) fn summand_offsets(alg: &Algebra, vertices: &[usize], u: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len() + 1);
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += alg.block(v, u).len();
    }
    out.push(acc);
    out
}

/// Coordinates of an element of `e_w A e_u` inside `P(w) e_u`.
fn elem_to_row(alg: &Algebra, x: &Elem, w: usize, u: usize) -> Mat {
    let blk = alg.block(w, u);
    let mut row = Mat::zeros(alg.field(), 1, blk.len());
    for (k, c) in x {
        let pos = blk.iter().position(|b| b == k).expect("element in block");
        row.set(0, pos, c.clone());
    }
    row
}

fn row_to_elem(alg: &Algebra, row: &[crate::exactlin::Scalar], w: usize, u: usize) -> Elem {
    let blk = alg.block(w, u);
    let mut out: Elem = row
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (blk[p], c.clone()))
        .collect();
    out.sort_by_key(|(k, _)| *k);
    out
}

impl ProjMap {
    pub fn zero(source: Vec<usize>, target: Vec<usize>) -> Self {
        let entries = vec![vec![Vec::new(); target.len()]; source.len()];
        ProjMap {
            source,
            target,
            entries,
        }
    }

    pub fn identity_on(alg: &Algebra, vertices: &[usize]) -> Self {
        let mut p = ProjMap::zero(vertices.to_vec(), vertices.to_vec());
        for (r, &v) in vertices.iter().enumerate() {
            p.entries[r][r] = alg.basis_elem_as_elem(alg.idempotent(v));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(Vec::is_empty))
    }

    /// "self, then other".
    pub fn then(&self, alg: &Algebra, other: &ProjMap) -> ProjMap {
        assert_eq!(self.target, other.source, "ProjMap composition mismatch");
        let mut out = ProjMap::zero(self.source.clone(), other.target.clone());
        for r in 0..self.source.len() {
            for t in 0..other.target.len() {
                let mut acc = Vec::new();
                for s in 0..self.target.len() {
                    let p = alg.mul(&other.entries[s][t], &self.entries[r][s]);
                    acc = elem_add(&acc, &p);
                }
                out.entries[r][t] = acc;
            }
        }
        out
    }

    /// Applies an index map to every entry (e.g. an algebra embedding).
    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> ProjMap {
        ProjMap {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            let mut y: Elem = x.iter().map(|(k, c)| (f(*k), c.clone())).collect();
                            y.sort_by_key(|(k, _)| *k);
                            y
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn source_module(&self, alg: &Arc<Algebra>) -> Module {
        projective_sum(alg, &self.source)
    }

    pub fn target_module(&self, alg: &Arc<Algebra>) -> Module {
        projective_sum(alg, &self.target)
    }

    /// The module morphism `⊕ P(v_r) → ⊕ P(w_s)`.
    pub fn to_morphism(&self, alg: &Algebra) -> Morphism {
        let field = alg.field();
        let blocks = (0..alg.num_vertices())
            .map(|u| {
                let so = summand_offsets(alg, &self.source, u);
                let to = summand_offsets(alg, &self.target, u);
                let mut blk = Mat::zeros(field, *so.last().unwrap(), *to.last().unwrap());
                for (r, &v) in self.source.iter().enumerate() {
                    for (k, b) in alg.block(v, u).into_iter().enumerate() {
                        let be = alg.basis_elem_as_elem(b);
                        for (s, &w) in self.target.iter().enumerate() {
                            let img = alg.mul(&self.entries[r][s], &be);
                            if img.is_empty() {
                                continue;
                            }
                            let row = elem_to_row(alg, &img, w, u);
                            blk.paste(so[r] + k, to[s], &row);
                        }
                    }
                }
                blk
            })
            .collect();
        Morphism { blocks }
    }

    /// Reads off the symbolic form of a morphism between projective sums.
    pub fn from_morphism(
        alg: &Algebra,
        f: &Morphism,
        source: &[usize],
        target: &[usize],
    ) -> ProjMap {
        let mut out = ProjMap::zero(source.to_vec(), target.to_vec());
        for (r, &v) in source.iter().enumerate() {
            let so = summand_offsets(alg, source, v);
            let row = f.blocks[v]
                .row(so[r] + projective_top_index(alg, v))
                .to_vec();
            let to = summand_offsets(alg, target, v);
            for (s, &w) in target.iter().enumerate() {
                out.entries[r][s] = row_to_elem(alg, &row[to[s]..to[s + 1]], w, v);
            }
        }
        out
    }

    /// Row of the generator `e_{v_r}` inside the vertex-`v_r` part of `⊕ P(v)`.
    pub fn generator_row(alg: &Algebra, vertices: &[usize], r: usize) -> usize {
        let v = vertices[r];
        summand_offsets(alg, vertices, v)[r] + projective_top_index(alg, v)
    }

    /// Entries from the rows `x_r ∈ (⊕ P(w_s)) e_{v_r}`.
    pub fn from_generator_images(
        alg: &Algebra,
        source: &[usize],
        target: &[usize],
        images: &[Mat],
    ) -> ProjMap {
        let mut out = ProjMap::zero(source.to_vec(), target.to_vec());
        for (r, &v) in source.iter().enumerate() {
            let to = summand_offsets(alg, target, v);
            let row = images[r].row(0);
            for (s, &w) in target.iter().enumerate() {
                out.entries[r][s] = row_to_elem(alg, &row[to[s]..to[s + 1]], w, v);
            }
        }
        out
    }
}
