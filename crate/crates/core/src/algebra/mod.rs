//! Finite-dimensional basic algebras given by structure constants.
//!
//! Every basis element `b` is tagged with a pair `(source, target)` meaning
//! `b ∈ e_source · A · e_target`; products of tagged elements vanish unless
//! the inner tags agree. The idempotent basis elements come first in the
//! radical complement; everything else spans the radical.

mod build;
mod cut;
mod quiver;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{self, Field, Mat, Scalar};

pub use build::{build_algebra, DEFAULT_PATH_CAP};
pub use cut::{apply_cut, Cut, CutAlgebra};
pub use quiver::{Arrow, ArrowSpec, BoundQuiver, Quiver, QuiverSpec, Relation, TermSpec};

/// Sparse linear combination of basis elements, sorted by index, no zeros.
pub type Elem = Vec<(usize, Scalar)>;

pub fn elem_add(a: &Elem, b: &Elem) -> Elem {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            let s = &a[i].1 + &b[j].1;
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn elem_scale(a: &Elem, s: &Scalar) -> Elem {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(k, x)| (*k, x * s)).collect()
}

/// Converts a dense coordinate row into a sparse element.
pub fn elem_from_row(row: &[Scalar]) -> Elem {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub source: usize,
    pub target: usize,
    pub label: String,
    /// Arrow indices when the element is a path of a bound quiver.
    pub path: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BoundQuiver,
    TrivialExtension,
    Opposite,
}

/// A degree-one generator ("arrow") of the radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    vertices: Vec<String>,
    basis: Vec<BasisElem>,
    table: Vec<Vec<Elem>>,
    idempotents: Vec<usize>,
    radical: Vec<usize>,
    generators: Vec<Generator>,
    provenance: Provenance,
    presentation: Option<BoundQuiver>,
}

impl Algebra {
    /// Assembles an algebra from raw data; `generators` are recomputed from
    /// rad/rad² when `None`.
    pub fn from_parts(
        field: Field,
        vertices: Vec<String>,
        basis: Vec<BasisElem>,
        table: Vec<Vec<Elem>>,
        idempotents: Vec<usize>,
        generators: Option<Vec<Generator>>,
        provenance: Provenance,
        presentation: Option<BoundQuiver>,
    ) -> Self {
        let radical = (0..basis.len())
            .filter(|b| !idempotents.contains(b))
            .collect();
        let mut a = Algebra {
            field,
            vertices,
            basis,
            table,
            idempotents,
            radical,
            generators: Vec::new(),
            provenance,
            presentation,
        };
        a.generators = match generators {
            Some(g) => g,
            None => a.compute_generators(),
        };
        a
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn vertex_label(&self, i: usize) -> &str {
        &self.vertices[i]
    }
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }
    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }
    pub fn basis_elem(&self, b: usize) -> &BasisElem {
        &self.basis[b]
    }
    pub fn idempotent(&self, i: usize) -> usize {
        self.idempotents[i]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn radical(&self) -> &[usize] {
        &self.radical
    }
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }
    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
    pub fn presentation(&self) -> Option<&BoundQuiver> {
        self.presentation.as_ref()
    }
    pub fn is_idempotent_index(&self, b: usize) -> bool {
        self.idempotents.contains(&b)
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, a: usize, b: usize) -> &Elem {
        &self.table[a][b]
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Vec::new();
        for (a, s) in x {
            for (b, t) in y {
                if self.basis[*a].target != self.basis[*b].source {
                    continue;
                }
                let prod = &self.table[*a][*b];
                if !prod.is_empty() {
                    out = elem_add(&out, &elem_scale(prod, &(s * t)));
                }
            }
        }
        out
    }

    pub fn basis_elem_as_elem(&self, b: usize) -> Elem {
        vec![(b, self.field.one())]
    }

    /// Basis indices of `e_i A e_j`.
    pub fn block(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].source == i && self.basis[b].target == j)
            .collect()
    }

    pub fn basis_with_source(&self, i: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].source == i)
            .collect()
    }

    pub fn basis_with_target(&self, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].target == j)
            .collect()
    }

    /// Whether a sparse element lies in `e_i A e_j`.
    pub fn elem_in_block(&self, x: &Elem, i: usize, j: usize) -> bool {
        x.iter()
            .all(|(b, _)| self.basis[*b].source == i && self.basis[*b].target == j)
    }

    /// Row basis of rad² in basis coordinates.
    pub fn radical_square(&self) -> Mat {
        let mut rows = Vec::new();
        for &a in &self.radical {
            for &b in &self.radical {
                let p = &self.table[a][b];
                if !p.is_empty() {
                    let mut row = vec![self.field.zero(); self.dim()];
                    for (k, s) in p {
                        row[*k] = s.clone();
                    }
                    rows.push(row);
                }
            }
        }
        exactlin::row_basis(&Mat::from_rows(self.field, self.dim(), rows))
    }

    fn compute_generators(&self) -> Vec<Generator> {
        let n = self.dim();
        let mut span = self.radical_square();
        let mut out = Vec::new();
        for &b in &self.radical {
            let mut row = Mat::zeros(self.field, 1, n);
            row.set(0, b, self.field.one());
            let candidate = span.vstack(&row);
            if exactlin::rank(&candidate) > span.rows() {
                span = exactlin::row_basis(&candidate);
                out.push(Generator {
                    name: self.basis[b].label.clone(),
                    index: b,
                });
            }
        }
        out
    }

    /// Arrow multiplicities `dim e_i (rad/rad²) e_j`, keyed by vertex labels.
    pub fn gabriel_quiver(&self) -> BTreeMap<(String, String), usize> {
        let r2 = self.radical_square();
        let mut out = BTreeMap::new();
        for i in 0..self.num_vertices() {
            for j in 0..self.num_vertices() {
                let blk: Vec<usize> = self
                    .block(i, j)
                    .into_iter()
                    .filter(|b| self.radical.contains(b))
                    .collect();
                if blk.is_empty() {
                    continue;
                }
                let r2_blk = exactlin::rank(&r2.select_cols(&blk));
                let m = blk.len() - r2_blk;
                if m > 0 {
                    out.insert((self.vertices[i].clone(), self.vertices[j].clone()), m);
                }
            }
        }
        out
    }

    /// Checks associativity on all basis triples, grading of the table and
    /// the idempotent relations.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let p = &self.table[a][b];
                let (ea, eb) = (&self.basis[a], &self.basis[b]);
                if ea.target != eb.source && !p.is_empty() {
                    return Err(Error::Input(format!(
                        "product {}·{} breaks the grading",
                        ea.label, eb.label
                    )));
                }
                if !self.elem_in_block(p, ea.source, eb.target) {
                    return Err(Error::Input(format!(
                        "product {}·{} lands outside its block",
                        ea.label, eb.label
                    )));
                }
            }
        }
        for (i, &e) in self.idempotents.iter().enumerate() {
            let be = &self.basis[e];
            if be.source != i || be.target != i {
                return Err(Error::Input(format!(
                    "idempotent {} is mis-tagged",
                    be.label
                )));
            }
            for b in 0..n {
                let bb = &self.basis[b];
                let left = &self.table[e][b];
                let right = &self.table[b][e];
                let want_left = if bb.source == i {
                    self.basis_elem_as_elem(b)
                } else {
                    Vec::new()
                };
                let want_right = if bb.target == i {
                    self.basis_elem_as_elem(b)
                } else {
                    Vec::new()
                };
                if *left != want_left || *right != want_right {
                    return Err(Error::Input(format!(
                        "idempotent {} does not act as a unit on {}",
                        be.label, bb.label
                    )));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.basis[a].target != self.basis[b].source {
                    continue;
                }
                let ab = &self.table[a][b];
                for c in 0..n {
                    if self.basis[b].target != self.basis[c].source {
                        continue;
                    }
                    let lhs = self.mul(ab, &self.basis_elem_as_elem(c));
                    let rhs = self.mul(&self.basis_elem_as_elem(a), &self.table[b][c]);
                    if lhs != rhs {
                        return Err(Error::Input(format!(
                            "associativity fails on ({}, {}, {})",
                            self.basis[a].label, self.basis[b].label, self.basis[c].label
                        )));
                    }
                }
            }
        }
        // the radical must be nilpotent
        let mut power: Vec<Elem> = self
            .radical
            .iter()
            .map(|&r| self.basis_elem_as_elem(r))
            .collect();
        for _ in 0..=n {
            if power.is_empty() {
                return Ok(());
            }
            let mut next = Vec::new();
            for x in &power {
                for &r in &self.radical {
                    let p = self.mul(x, &self.basis_elem_as_elem(r));
                    if !p.is_empty() {
                        next.push(p);
                    }
                }
            }
            power = next;
            if power.len() > 4 * n * n {
                // keep the working set small by passing to a row basis
                let rows: Vec<Vec<Scalar>> = power.iter().map(|e| self.dense(e)).collect();
                let basis = exactlin::row_basis(&Mat::from_rows(self.field, n, rows));
                power = (0..basis.rows())
                    .map(|r| elem_from_row(basis.row(r)))
                    .collect();
            }
        }
        Err(Error::Input("radical is not nilpotent".into()))
    }

    pub fn dense(&self, x: &Elem) -> Vec<Scalar> {
        let mut row = vec![self.field.zero(); self.dim()];
        for (k, s) in x {
            row[*k] = s.clone();
        }
        row
    }

    /// The opposite algebra: same basis, reversed products and tags.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let basis = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| BasisElem {
                source: b.target,
                target: b.source,
                label: if self.idempotents.contains(&i) {
                    b.label.clone()
                } else {
                    op_label(&b.label)
                },
                path: b.path.as_ref().map(|p| p.iter().rev().copied().collect()),
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| self.table[b][a].clone()).collect())
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|g| Generator {
                name: op_label(&g.name),
                index: g.index,
            })
            .collect();
        let presentation = self.presentation.as_ref().map(|bq| {
            let mut q = bq.quiver.clone();
            for a in &mut q.arrows {
                std::mem::swap(&mut a.source, &mut a.target);
                a.name = op_label(&a.name);
            }
            BoundQuiver {
                field: bq.field,
                quiver: q,
                relations: bq
                    .relations
                    .iter()
                    .map(|r| Relation {
                        terms: r
                            .terms
                            .iter()
                            .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                            .collect(),
                    })
                    .collect(),
            }
        });
        let provenance = match self.provenance {
            Provenance::Opposite => Provenance::BoundQuiver,
            _ => Provenance::Opposite,
        };
        Algebra {
            field: self.field,
            vertices: self.vertices.clone(),
            basis,
            table,
            idempotents: self.idempotents.clone(),
            radical: self.radical.clone(),
            generators,
            provenance,
            presentation,
        }
    }

    /// Whether two algebras have identical structure tables and tags.
    pub fn same_tables(&self, other: &Algebra) -> bool {
        self.field == other.field
            && self.vertices == other.vertices
            && self.table == other.table
            && self.idempotents == other.idempotents
            && self
                .basis
                .iter()
                .zip(&other.basis)
                .all(|(a, b)| a.source == b.source && a.target == b.target)
    }

    pub fn into_arc(self) -> Arc<Algebra> {
        Arc::new(self)
    }
}

fn op_label(s: &str) -> String {
    match s.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{s}^op"),
    }
}
