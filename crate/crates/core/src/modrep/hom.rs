//! Hom spaces, kernels, cokernels and images.

use super::module::{Module, Morphism};
use crate::exactlin::{self, Mat};

/// Basis of `Hom_A(m, n)`, from the intertwining equations for the
/// generators of the radical.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<Morphism> {
    let field = m.field();
    let alg = m.algebra();
    let nv = alg.num_vertices();
    let mut offset = vec![0; nv + 1];
    for i in 0..nv {
        offset[i + 1] = offset[i] + m.dim_at(i) * n.dim_at(i);
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    // Unknown (i, p, q) is entry (p, q) of the block F_i.
    let var = |i: usize, p: usize, q: usize| offset[i] + p * n.dim_at(i) + q;
    let mut cols: Vec<Vec<(usize, crate::exactlin::Scalar)>> = Vec::new();
    for g in alg.generators() {
        let e = alg.basis_elem(g.index);
        let (s, t) = (e.source, e.target);
        let (am, an) = (m.action(g.index), n.action(g.index));
        // equation (p, q): Σ_r am[p,r] F_t[r,q] − Σ_r F_s[p,r] an[r,q] = 0
        for p in 0..m.dim_at(s) {
            for q in 0..n.dim_at(t) {
                let mut col = Vec::new();
                for r in 0..m.dim_at(t) {
                    let c = am.get(p, r);
                    if !c.is_zero() {
                        col.push((var(t, r, q), c.clone()));
                    }
                }
                for r in 0..n.dim_at(s) {
                    let c = an.get(r, q);
                    if !c.is_zero() {
                        col.push((var(s, p, r), -c));
                    }
                }
                if !col.is_empty() {
                    cols.push(col);
                }
            }
        }
    }
    let mut sys = Mat::zeros(field, unknowns, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (v, c) in col {
            sys.add_at(*v, j, c);
        }
    }
    let ker = exactlin::kernel(&sys);
    (0..ker.rows())
        .map(|k| {
            let blocks = (0..nv)
                .map(|i| {
                    let (a, b) = (m.dim_at(i), n.dim_at(i));
                    let mut blk = Mat::zeros(field, a, b);
                    for p in 0..a {
                        for q in 0..b {
                            blk.set(p, q, ker.get(k, var(i, p, q)).clone());
                        }
                    }
                    blk
                })
                .collect();
            Morphism { blocks }
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

/// Kernel of `f: m → n` with its inclusion.
pub fn kernel(m: &Module, f: &Morphism) -> (Module, Morphism) {
    let rows: Vec<Mat> = f.blocks.iter().map(exactlin::kernel).collect();
    m.submodule(&rows)
}

/// Image of `f: m → n` as a submodule of `n`.
pub fn image(n: &Module, f: &Morphism) -> (Module, Morphism) {
    n.submodule(&f.blocks)
}

/// Cokernel of `f: m → n` with its projection.
pub fn cokernel(n: &Module, f: &Morphism) -> (Module, Morphism) {
    n.quotient(&f.blocks)
}

/// `[f; g]: m₁ ⊕ m₂ → n` from `f: m₁ → n`, `g: m₂ → n`.
pub fn copair(f: &Morphism, g: &Morphism) -> Morphism {
    Morphism {
        blocks: f
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| a.vstack(b))
            .collect(),
    }
}

/// Projection `m₁ ⊕ m₂ → m₁` (`first`) or `→ m₂`.
pub fn sum_projection(m1: &Module, m2: &Module, first: bool) -> Morphism {
    let field = m1.field();
    Morphism {
        blocks: m1
            .dims()
            .iter()
            .zip(m2.dims())
            .map(|(&a, &b)| {
                let top = if first {
                    Mat::identity(field, a)
                } else {
                    Mat::zeros(field, a, b)
                };
                let bottom = if first {
                    Mat::zeros(field, b, a)
                } else {
                    Mat::identity(field, b)
                };
                top.vstack(&bottom)
            })
            .collect(),
    }
}

/// Inclusion `m₁ → m₁ ⊕ m₂` (`first`) or `m₂ → m₁ ⊕ m₂`.
pub fn sum_inclusion(m1: &Module, m2: &Module, first: bool) -> Morphism {
    let p = sum_projection(m1, m2, first);
    Morphism {
        blocks: p.blocks.iter().map(Mat::transpose).collect(),
    }
}
