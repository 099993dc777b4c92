//! Right modules in vertex-graded form.
//!
//! A module over `A` is stored as a vector space per vertex, `M e_i`, and
//! for every basis element `b ∈ e_s A e_t` a matrix `M e_s → M e_t`
//! (rows are vectors, the action is right multiplication).

use std::sync::Arc;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactlin::{self, Field, Mat};

#[derive(Clone, Debug)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    act: Vec<Mat>,
}

impl Module {
    /// Unchecked constructor; see [`Module::validate`].
    pub fn from_parts(alg: Arc<Algebra>, dims: Vec<usize>, act: Vec<Mat>) -> Self {
        debug_assert_eq!(dims.len(), alg.num_vertices());
        debug_assert_eq!(act.len(), alg.dim());
        Module { alg, dims, act }
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let field = alg.field();
        let act = alg
            .basis()
            .iter()
            .map(|_| Mat::zeros(field, 0, 0))
            .collect();
        Module {
            alg: alg.clone(),
            dims: vec![0; alg.num_vertices()],
            act,
        }
    }

    /// The simple module at vertex `i`.
    pub fn simple(alg: &Arc<Algebra>, i: usize) -> Self {
        let field = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        dims[i] = 1;
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                if b == alg.idempotent(i) {
                    Mat::identity(field, 1)
                } else {
                    Mat::zeros(field, dims[e.source], dims[e.target])
                }
            })
            .collect();
        Module {
            alg: alg.clone(),
            dims,
            act,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }
    pub fn field(&self) -> Field {
        self.alg.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i]
    }
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn action(&self, b: usize) -> &Mat {
        &self.act[b]
    }

    /// Action of an element of `e_s A e_t`.
    pub fn act_elem(&self, x: &Elem, s: usize, t: usize) -> Mat {
        let mut out = Mat::zeros(self.field(), self.dims[s], self.dims[t]);
        for (b, c) in x {
            let e = self.alg.basis_elem(*b);
            debug_assert!(e.source == s && e.target == t, "element outside block");
            out.axpy(c, &self.act[*b]);
        }
        out
    }

    /// Checks unit, grading and multiplicativity of the action.
    pub fn validate(&self) -> Result<()> {
        let a = &self.alg;
        for (b, e) in a.basis().iter().enumerate() {
            let m = &self.act[b];
            if m.rows() != self.dims[e.source] || m.cols() != self.dims[e.target] {
                return Err(Error::ShapeMismatch(format!(
                    "action of {} has the wrong shape",
                    e.label
                )));
            }
        }
        for (i, &e) in a.idempotents().iter().enumerate() {
            if self.act[e] != Mat::identity(self.field(), self.dims[i]) {
                return Err(Error::ShapeMismatch(format!(
                    "idempotent at {} is not the identity",
                    a.vertex_label(i)
                )));
            }
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let (ex, ey) = (a.basis_elem(x), a.basis_elem(y));
                if ex.target != ey.source {
                    continue;
                }
                let lhs = self.act[x].mul(&self.act[y]);
                let rhs = self.act_elem(a.mul_basis(x, y), ex.source, ey.target);
                if lhs != rhs {
                    return Err(Error::RelationViolated(format!(
                        "action is not multiplicative on {}·{}",
                        ex.label, ey.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Offsets of each vertex block inside the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Action of basis element `b` on the total space.
    pub fn total_action(&self, b: usize) -> Mat {
        let e = self.alg.basis_elem(b);
        let off = self.offsets();
        let mut out = Mat::zeros(self.field(), self.dim(), self.dim());
        out.paste(off[e.source], off[e.target], &self.act[b]);
        out
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        assert!(
            Arc::ptr_eq(&self.alg, &other.alg),
            "direct sum over different algebras"
        );
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let act = self
            .act
            .iter()
            .zip(&other.act)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Module {
            alg: self.alg.clone(),
            dims,
            act,
        }
    }

    pub fn direct_sum_all<'a>(
        alg: &Arc<Algebra>,
        parts: impl IntoIterator<Item = &'a Module>,
    ) -> Module {
        parts
            .into_iter()
            .fold(Module::zero(alg), |acc, m| acc.direct_sum(m))
    }

    /// Restriction of scalars along an algebra map that sends basis element
    /// `k` of `target` to basis element `embedding[k]` of `self`'s algebra.
    pub fn restrict(&self, target: &Arc<Algebra>, embedding: &[usize]) -> Module {
        let act = embedding.iter().map(|&b| self.act[b].clone()).collect();
        Module {
            alg: target.clone(),
            dims: self.dims.clone(),
            act,
        }
    }

    /// Module over `target` on which basis elements outside the image of
    /// `embedding` (indices into `target`) act as zero.
    pub fn inflate(&self, target: &Arc<Algebra>, embedding: &[usize]) -> Module {
        let field = self.field();
        let mut act: Vec<Mat> = target
            .basis()
            .iter()
            .map(|e| Mat::zeros(field, self.dims[e.source], self.dims[e.target]))
            .collect();
        for (k, &b) in embedding.iter().enumerate() {
            act[b] = self.act[k].clone();
        }
        Module {
            alg: target.clone(),
            dims: self.dims.clone(),
            act,
        }
    }

    /// Reinterprets the module over an algebra with identical tables.
    pub fn rebind(&self, alg: &Arc<Algebra>) -> Module {
        debug_assert!(self.alg.same_tables(alg) || self.alg.dim() == alg.dim());
        Module {
            alg: alg.clone(),
            dims: self.dims.clone(),
            act: self.act.clone(),
        }
    }

    /// Submodule spanned (per vertex) by the given row bases, which must be
    /// closed under the action.
    pub fn submodule(&self, rows: &[Mat]) -> (Module, Morphism) {
        let field = self.field();
        let bases: Vec<Mat> = rows.iter().map(exactlin::row_basis).collect();
        let dims: Vec<usize> = bases.iter().map(Mat::rows).collect();
        let act = self
            .alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                let img = bases[e.source].mul(&self.act[b]);
                if dims[e.source] == 0 || dims[e.target] == 0 {
                    return Mat::zeros(field, dims[e.source], dims[e.target]);
                }
                exactlin::solve_right(&bases[e.target], &img).expect("subspace is not a submodule")
            })
            .collect();
        (
            Module {
                alg: self.alg.clone(),
                dims,
                act,
            },
            Morphism { blocks: bases },
        )
    }

    /// Quotient by the submodule spanned per vertex by `rows`.
    pub fn quotient(&self, rows: &[Mat]) -> (Module, Morphism) {
        let quots: Vec<_> = rows
            .iter()
            .zip(&self.dims)
            .map(|(r, &d)| exactlin::image_quotient(r, d))
            .collect();
        let dims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
        let act = self
            .alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                quots[e.source]
                    .section
                    .mul(&self.act[b])
                    .mul(&quots[e.target].projection)
            })
            .collect();
        (
            Module {
                alg: self.alg.clone(),
                dims,
                act,
            },
            Morphism {
                blocks: quots.into_iter().map(|q| q.projection).collect(),
            },
        )
    }

    /// `M·rad` per vertex, as row bases.
    pub fn radical_rows(&self) -> Vec<Mat> {
        self.radical_of(&self.identity_rows())
    }

    fn identity_rows(&self) -> Vec<Mat> {
        self.dims
            .iter()
            .map(|&d| Mat::identity(self.field(), d))
            .collect()
    }

    /// `N·rad` for a submodule `N` given by row bases.
    pub fn radical_of(&self, sub: &[Mat]) -> Vec<Mat> {
        let field = self.field();
        let mut out: Vec<Mat> = self.dims.iter().map(|&d| Mat::zeros(field, 0, d)).collect();
        for g in self.alg.generators() {
            let e = self.alg.basis_elem(g.index);
            let img = sub[e.source].mul(&self.act[g.index]);
            out[e.target] = out[e.target].vstack(&img);
        }
        out.iter().map(exactlin::row_basis).collect()
    }

    /// Socle per vertex: vectors killed by every generator of the radical.
    pub fn socle_rows(&self) -> Vec<Mat> {
        let field = self.field();
        (0..self.dims.len())
            .map(|i| {
                let mut stacked = Mat::zeros(field, self.dims[i], 0);
                for g in self.alg.generators() {
                    if self.alg.basis_elem(g.index).source == i {
                        stacked = stacked.hstack(&self.act[g.index]);
                    }
                }
                exactlin::kernel(&stacked)
            })
            .collect()
    }

    pub fn socle(&self) -> (Module, Morphism) {
        self.submodule(&self.socle_rows())
    }

    pub fn radical(&self) -> (Module, Morphism) {
        self.submodule(&self.radical_rows())
    }

    pub fn top(&self) -> (Module, Morphism) {
        self.quotient(&self.radical_rows())
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_rows().iter().map(Mat::rows).collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_rows()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.rows())
            .collect()
    }

    /// Radical layers as per-vertex multiplicities, top layer first.
    pub fn loewy_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut cur = self.identity_rows();
        loop {
            let total: usize = cur.iter().map(Mat::rows).sum();
            if total == 0 {
                break;
            }
            let next = self.radical_of(&cur);
            layers.push(
                cur.iter()
                    .zip(&next)
                    .map(|(a, b)| a.rows() - b.rows())
                    .collect(),
            );
            cur = next;
            if layers.len() > self.dim() + 1 {
                break;
            }
        }
        layers
    }

    /// Stacked notation such as `1/(2 3)` or `4/1/2/5`.
    pub fn loewy_string(&self) -> String {
        let layers = self.loewy_layers();
        if layers.is_empty() {
            return "0".into();
        }
        layers
            .iter()
            .map(|layer| {
                let items: Vec<&str> = layer
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &m)| std::iter::repeat_n(self.alg.vertex_label(i), m))
                    .collect();
                if items.len() == 1 {
                    items[0].to_string()
                } else {
                    format!("({})", items.join(" "))
                }
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// A module homomorphism, stored per vertex: `blocks[i]` maps `M e_i` to `N e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Mat>,
}

impl Morphism {
    pub fn zero(src: &Module, dst: &Module) -> Self {
        Morphism {
            blocks: src
                .dims
                .iter()
                .zip(&dst.dims)
                .map(|(&a, &b)| Mat::zeros(src.field(), a, b))
                .collect(),
        }
    }

    pub fn identity(m: &Module) -> Self {
        Morphism {
            blocks: m
                .dims
                .iter()
                .map(|&d| Mat::identity(m.field(), d))
                .collect(),
        }
    }

    /// "self, then other".
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &crate::exactlin::Scalar) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(exactlin::rank).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.blocks.iter().all(|b| exactlin::rank(b) == b.rows())
    }

    pub fn is_epi(&self) -> bool {
        self.blocks.iter().all(|b| exactlin::rank(b) == b.cols())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.rows() == b.cols() && exactlin::rank(b) == b.rows())
    }

    pub fn intertwines(&self, src: &Module, dst: &Module) -> bool {
        let alg = src.algebra();
        alg.basis().iter().enumerate().all(|(b, e)| {
            src.action(b).mul(&self.blocks[e.target]) == self.blocks[e.source].mul(dst.action(b))
        })
    }

    /// Block matrix on total spaces.
    pub fn total(&self) -> Mat {
        let field = self.blocks[0].field();
        let rows: usize = self.blocks.iter().map(Mat::rows).sum();
        let cols: usize = self.blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in &self.blocks {
            out.paste(r, c, b);
            r += b.rows();
            c += b.cols();
        }
        out
    }

    /// `(f, g): M → N₁ ⊕ N₂`.
    pub fn pair(&self, other: &Morphism) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.hstack(b))
                .collect(),
        }
    }

    /// `f ⊕ g: M₁ ⊕ M₂ → N₁ ⊕ N₂`.
    pub fn direct_sum(&self, other: &Morphism) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        }
    }
}
