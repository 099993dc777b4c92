//! Minimal projective resolutions, chain-map lifting and Ext spaces.

use std::sync::Arc;

use super::projmap::{summand_offsets, ProjMap};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat, Quotient};
use crate::modrep::{
    cokernel, hom_basis, injective_envelope, kernel, projective_cover, Module, Morphism,
};

/// `⋯ → P₂ → P₁ → P₀ → X → 0`, truncated at a requested length.
#[derive(Clone, Debug)]
pub struct ProjResolution {
    /// Vertex multisets of `P₀, P₁, …`.
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<Module>,
    /// `P₀ → X`.
    pub augmentation: Morphism,
    /// `d[k]: P_{k+1} → P_k` in symbolic form.
    pub differentials: Vec<ProjMap>,
}

impl ProjResolution {
    /// Length of the resolution when it stops before the requested bound.
    pub fn length(&self) -> usize {
        self.terms
            .iter()
            .rposition(|t| !t.is_empty())
            .map_or(0, |k| k)
    }

    pub fn term(&self, k: usize) -> &[usize] {
        self.terms.get(k).map_or(&[], Vec::as_slice)
    }
}

/// Minimal projective resolution with terms `P₀ … P_len`.
pub fn projective_resolution(x: &Module, len: usize) -> ProjResolution {
    let alg = x.algebra().clone();
    let cover = projective_cover(x);
    let mut terms = vec![cover.vertices.clone()];
    let mut modules = vec![cover.source.clone()];
    let mut differentials = Vec::new();
    let (mut ker, mut inc) = kernel(&cover.source, &cover.map);
    for _ in 0..len {
        if ker.is_zero() {
            break;
        }
        let c = projective_cover(&ker);
        let d = c.map.then(&inc);
        let prev = terms.last().unwrap().clone();
        differentials.push(ProjMap::from_morphism(&alg, &d, &c.vertices, &prev));
        let (k2, i2) = kernel(&c.source, &c.map);
        terms.push(c.vertices);
        modules.push(c.source);
        ker = k2;
        inc = i2;
    }
    ProjResolution {
        terms,
        modules,
        augmentation: cover.map,
        differentials,
    }
}

/// Finds `λ: ⊕ P(src) → ⊕ P(dst)` with `λ·d = h`, where `h` and `d` are
/// morphisms out of `⊕ P(src)` and `⊕ P(dst)` into a common module.
pub fn lift_through(
    alg: &Algebra,
    src: &[usize],
    h: &Morphism,
    dst: &[usize],
    d: &Morphism,
) -> Result<ProjMap> {
    let mut images = Vec::with_capacity(src.len());
    for (r, &v) in src.iter().enumerate() {
        let row = ProjMap::generator_row(alg, src, r);
        let want = h.blocks[v].row_vec(row);
        let blk = &d.blocks[v];
        let x = if blk.rows() == 0 {
            if !want.is_zero() {
                return Err(Error::LiftFailed(
                    "target has no room for the required image".into(),
                ));
            }
            Mat::zeros(alg.field(), 1, 0)
        } else {
            exactlin::solve_right(blk, &want).ok_or_else(|| {
                Error::LiftFailed("image is not in the image of the differential".into())
            })?
        };
        images.push(x);
    }
    Ok(ProjMap::from_generator_images(alg, src, dst, &images))
}

/// Chain map `λ^k: P_k(X) → P_k(Y)` lifting `f: X → Y`, for `k ≤ upto`.
pub fn lift_morphism(
    f: &Morphism,
    rx: &ProjResolution,
    ry: &ProjResolution,
    upto: usize,
) -> Result<Vec<ProjMap>> {
    let alg = rx.modules[0].algebra().clone();
    let h = rx.augmentation.then(f);
    let l0 = lift_through(&alg, rx.term(0), &h, ry.term(0), &ry.augmentation)?;
    let mut out = vec![l0];
    for k in 1..=upto {
        let (sx, sy) = (rx.term(k), ry.term(k));
        if sx.is_empty() {
            out.push(ProjMap::zero(Vec::new(), sy.to_vec()));
            continue;
        }
        // h = d_k^X then λ^{k-1}: P_k(X) → P_{k-1}(Y)
        let dx = rx.differentials[k - 1].then(&alg, &out[k - 1]);
        let hk = dx.to_morphism(&alg);
        let dy = match ry.differentials.get(k - 1) {
            Some(d) => d.to_morphism(&alg),
            None => Morphism {
                blocks: (0..alg.num_vertices())
                    .map(|u| {
                        Mat::zeros(
                            alg.field(),
                            0,
                            summand_offsets(&alg, ry.term(k - 1), u)
                                .last()
                                .copied()
                                .unwrap_or(0),
                        )
                    })
                    .collect(),
            },
        };
        out.push(lift_through(&alg, sx, &hk, sy, &dy)?);
    }
    Ok(out)
}

/// Matrix of `Hom(d, n): Hom(⊕P(w_s), n) → Hom(⊕P(v_r), n)`, with
/// `Hom(P(v), n)` identified with `n e_v`.
pub fn hom_into(d: &ProjMap, n: &Module) -> Mat {
    let field = n.field();
    let rows: Vec<usize> = d.target.iter().map(|&w| n.dim_at(w)).collect();
    let cols: Vec<usize> = d.source.iter().map(|&v| n.dim_at(v)).collect();
    let mut out = Mat::zeros(field, rows.iter().sum(), cols.iter().sum());
    let mut ro = 0;
    for (s, &w) in d.target.iter().enumerate() {
        let mut co = 0;
        for (r, &v) in d.source.iter().enumerate() {
            let a = &d.entries[r][s];
            if !a.is_empty() {
                out.paste(ro, co, &n.act_elem(a, w, v));
            }
            co += cols[r];
        }
        ro += rows[s];
    }
    out
}

pub fn hom_space_dim(vertices: &[usize], n: &Module) -> usize {
    vertices.iter().map(|&v| n.dim_at(v)).sum()
}

/// A cohomology group `Z/B` at one spot of a cochain complex of
/// `Hom(P_•, n)`, with coordinates of classes.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub ambient: usize,
    /// Cocycles as rows in ambient coordinates.
    pub cocycles: Mat,
    quotient: Quotient,
}

impl Cohomology {
    /// `delta_in: C^{k-1} → C^k`, `delta_out: C^k → C^{k+1}`, as matrices
    /// (either may have zero rows or columns).
    pub fn new(ambient: usize, delta_in: &Mat, delta_out: &Mat) -> Self {
        let field = delta_in.field();
        let cocycles = if delta_out.cols() == 0 {
            Mat::identity(field, ambient)
        } else {
            exactlin::kernel(delta_out)
        };
        let bounds = exactlin::row_basis(delta_in);
        let in_z = if bounds.rows() == 0 {
            Mat::zeros(field, 0, cocycles.rows())
        } else {
            exactlin::solve_right(&cocycles, &bounds).expect("coboundaries are cocycles")
        };
        let quotient = exactlin::image_quotient(&in_z, cocycles.rows());
        Cohomology {
            ambient,
            cocycles,
            quotient,
        }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Representative cocycles of the class basis, as rows.
    pub fn representatives(&self) -> Mat {
        self.quotient.section.mul(&self.cocycles)
    }

    /// Class coordinates of cocycles given as rows.
    pub fn classes(&self, rows: &Mat) -> Mat {
        if rows.rows() == 0 {
            return Mat::zeros(rows.field(), 0, self.dim());
        }
        if self.cocycles.rows() == 0 {
            return Mat::zeros(rows.field(), rows.rows(), 0);
        }
        exactlin::solve_right(&self.cocycles, rows)
            .expect("not a cocycle")
            .mul(&self.quotient.projection)
    }
}

/// `Ext^i(x, n)` from a projective resolution of `x`, with its cocycle data.
pub fn ext_projective(res: &ProjResolution, n: &Module, i: usize) -> Cohomology {
    let field = n.field();
    let amb = hom_space_dim(res.term(i), n);
    let delta_in = match i.checked_sub(1).and_then(|k| res.differentials.get(k)) {
        Some(d) => hom_into(d, n),
        None => Mat::zeros(
            field,
            i.checked_sub(1)
                .map_or(0, |k| hom_space_dim(res.term(k), n)),
            amb,
        ),
    };
    let delta_out = match res.differentials.get(i) {
        Some(d) => hom_into(d, n),
        None => Mat::zeros(field, amb, 0),
    };
    Cohomology::new(amb, &delta_in, &delta_out)
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> usize {
    let res = projective_resolution(m, i + 1);
    ext_projective(&res, n, i).dim()
}

/// `dim Ext^i(m, n)` computed from a minimal injective coresolution of `n`.
pub fn ext_dim_injective(m: &Module, n: &Module, i: usize) -> usize {
    // I^0 … I^{i+1} and the differentials between them
    let mut terms = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let env = injective_envelope(n);
    let (mut cok, mut pi) = cokernel(&env.target, &env.map);
    terms.push(env.target);
    for _ in 0..=i {
        let e = injective_envelope(&cok);
        maps.push(pi.then(&e.map));
        let (c2, p2) = cokernel(&e.target, &e.map);
        terms.push(e.target);
        cok = c2;
        pi = p2;
    }
    let hom_rank = |k: usize| -> (usize, usize) {
        // (dim Hom(m, I^k), rank of Hom(m, I^k) → Hom(m, I^{k+1}))
        let basis = hom_basis(m, &terms[k]);
        let rows: Vec<Vec<_>> = basis
            .iter()
            .map(|h| h.then(&maps[k]).total().entries().cloned().collect())
            .collect();
        let cols = m.dim() * terms[k + 1].dim();
        (
            basis.len(),
            exactlin::rank(&Mat::from_rows(n.field(), cols, rows)),
        )
    };
    let (dim_i, rank_out) = hom_rank(i);
    let rank_in = if i == 0 { 0 } else { hom_rank(i - 1).1 };
    dim_i - rank_out - rank_in
}

/// `Ext^degree(x, n)` as a right module, where `x = ⊕_k e_k X` carries a left
/// action: `parts[k]` is `e_k X` and `left(c)` is the right-linear map
/// `e_j X → e_i X` of left multiplication by a basis element `c ∈ e_i A e_j`.
/// The result has `Ext(e_k X, n)` at vertex `k`.
pub fn ext_right_module(
    alg: &Arc<Algebra>,
    parts: &[Module],
    left: &dyn Fn(usize) -> Morphism,
    n: &Module,
    degree: usize,
) -> Result<Module> {
    let field = alg.field();
    let res: Vec<ProjResolution> = parts
        .iter()
        .map(|p| projective_resolution(p, degree + 1))
        .collect();
    let coh: Vec<Cohomology> = res.iter().map(|r| ext_projective(r, n, degree)).collect();
    let dims: Vec<usize> = coh.iter().map(Cohomology::dim).collect();
    let mut act = Vec::with_capacity(alg.dim());
    for (c, e) in alg.basis().iter().enumerate() {
        let (i, j) = (e.source, e.target);
        if dims[i] == 0 || dims[j] == 0 {
            act.push(Mat::zeros(field, dims[i], dims[j]));
            continue;
        }
        let lam = lift_morphism(&left(c), &res[j], &res[i], degree)?;
        // ξ ∈ Hom(P_d(e_i X), n) goes to ξ∘λ^d ∈ Hom(P_d(e_j X), n)
        let pull = hom_into(&lam[degree], n);
        let reps = coh[i].representatives();
        act.push(coh[j].classes(&reps.mul(&pull)));
    }
    let m = Module::from_parts(alg.clone(), dims, act);
    m.validate()?;
    Ok(m)
}
