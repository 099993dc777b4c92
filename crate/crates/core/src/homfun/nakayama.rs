//! The Nakayama functor `ν = D Hom(−, A)` on symbolic projective maps and
//! its inverse on maps between injectives.

use super::projmap::ProjMap;
use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat};
use crate::modrep::Morphism;

/// Row offsets of each summand inside the vertex-`u` part of `⊕ I(v)`.
pub(crate) fn inj_offsets(alg: &Algebra, vertices: &[usize], u: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len() + 1);
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += alg.block(u, v).len();
    }
    out.push(acc);
    out
}

/// Vertex-`u` block of `ν(a): I(v) → I(w)` for `a ∈ e_w A e_v`: the functional
/// `ψ` goes to `y ↦ ψ(y·a)`.
pub(crate) fn nu_block(alg: &Algebra, a: &Elem, v: usize, w: usize, u: usize) -> Mat {
    let xs = alg.block(u, v);
    let ys = alg.block(u, w);
    let mut out = Mat::zeros(alg.field(), xs.len(), ys.len());
    if a.is_empty() {
        return out;
    }
    for (col, &y) in ys.iter().enumerate() {
        let prod = alg.mul(&alg.basis_elem_as_elem(y), a);
        for (k, c) in prod {
            let row = xs.iter().position(|&x| x == k).expect("grading");
            out.set(row, col, c);
        }
    }
    out
}

/// `ν(f): ⊕ I(v_r) → ⊕ I(w_s)`.
pub fn nakayama(alg: &Algebra, pm: &ProjMap) -> Morphism {
    let field = alg.field();
    let blocks = (0..alg.num_vertices())
        .map(|u| {
            let ro = inj_offsets(alg, &pm.source, u);
            let co = inj_offsets(alg, &pm.target, u);
            let mut blk = Mat::zeros(field, *ro.last().unwrap(), *co.last().unwrap());
            for (r, &v) in pm.source.iter().enumerate() {
                for (s, &w) in pm.target.iter().enumerate() {
                    let b = nu_block(alg, &pm.entries[r][s], v, w, u);
                    blk.paste(ro[r], co[s], &b);
                }
            }
            blk
        })
        .collect();
    Morphism { blocks }
}

/// Flattens the `(r, s)` component of a morphism between injective sums.
fn flatten_component(
    alg: &Algebra,
    f: &Morphism,
    source: &[usize],
    target: &[usize],
    r: usize,
    s: usize,
) -> Vec<crate::exactlin::Scalar> {
    let mut out = Vec::new();
    for u in 0..alg.num_vertices() {
        let ro = inj_offsets(alg, source, u);
        let co = inj_offsets(alg, target, u);
        let sub = f.blocks[u].submatrix(ro[r]..ro[r + 1], co[s]..co[s + 1]);
        out.extend(sub.entries().cloned());
    }
    out
}

/// `ν⁻¹(f)` for `f: ⊕ I(v_r) → ⊕ I(w_s)`.
pub fn nakayama_inverse(
    alg: &Algebra,
    f: &Morphism,
    source: &[usize],
    target: &[usize],
) -> Result<ProjMap> {
    let field = alg.field();
    let mut out = ProjMap::zero(source.to_vec(), target.to_vec());
    for (r, &v) in source.iter().enumerate() {
        for (s, &w) in target.iter().enumerate() {
            let want = flatten_component(alg, f, source, target, r, s);
            let basis = alg.block(w, v);
            if basis.is_empty() {
                if want.iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotInjective(
                        "map between injectives is not natural in the declared summands".into(),
                    ));
                }
                continue;
            }
            let n = want.len();
            let rows: Vec<Vec<_>> = basis
                .iter()
                .map(|&b| {
                    let single = ProjMap {
                        source: vec![v],
                        target: vec![w],
                        entries: vec![vec![alg.basis_elem_as_elem(b)]],
                    };
                    flatten_component(alg, &nakayama(alg, &single), &[v], &[w], 0, 0)
                })
                .collect();
            let a = Mat::from_rows(field, n, rows);
            let b = Mat::from_rows(field, n, vec![want]);
            let x = exactlin::solve_right(&a, &b).ok_or_else(|| {
                Error::NotInjective(
                    "map between injectives is not natural in the declared summands".into(),
                )
            })?;
            let mut e: Elem = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| !x.get(0, *k).is_zero())
                .map(|(k, &bi)| (bi, x.get(0, k).clone()))
                .collect();
            e.sort_by_key(|(k, _)| *k);
            out.entries[r][s] = e;
        }
    }
    Ok(out)
}
