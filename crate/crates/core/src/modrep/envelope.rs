//! Injective envelopes, projective covers, minimal presentations and
//! homological dimensions.

use std::sync::Arc;

use super::hom::{cokernel, copair, kernel};
use super::module::{Module, Morphism};
use super::standard::{injective_sum, projective_sum};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat};

/// The map `m → I(j)` attached to a functional `phi` (a `dim m e_j × 1`
/// column) on `m e_j`: a vector `v ∈ m e_u` goes to `x ↦ phi(v·x)`.
pub fn map_to_injective(m: &Module, j: usize, phi: &Mat) -> Morphism {
    let alg = m.algebra();
    let blocks = (0..alg.num_vertices())
        .map(|u| {
            let xs = alg.block(u, j);
            let mut blk = Mat::zeros(m.field(), m.dim_at(u), xs.len());
            for (c, &x) in xs.iter().enumerate() {
                let col = m.action(x).mul(phi);
                for r in 0..m.dim_at(u) {
                    blk.set(r, c, col.get(r, 0).clone());
                }
            }
            blk
        })
        .collect();
    Morphism { blocks }
}

/// The map `P(i) → m` sending `e_i` to the vector `v ∈ m e_i` (a `1 × dim` row).
pub fn map_from_projective(m: &Module, i: usize, v: &Mat) -> Morphism {
    let alg = m.algebra();
    let blocks = (0..alg.num_vertices())
        .map(|u| {
            let mut blk = Mat::zeros(m.field(), 0, m.dim_at(u));
            for b in alg.block(i, u) {
                blk = blk.vstack(&v.mul(m.action(b)));
            }
            blk
        })
        .collect();
    Morphism { blocks }
}

/// An injective module `⊕ I(v)` together with a map into it.
#[derive(Clone, Debug)]
pub struct InjMap {
    pub vertices: Vec<usize>,
    pub target: Module,
    pub map: Morphism,
}

/// A projective module `⊕ P(v)` together with a map out of it.
#[derive(Clone, Debug)]
pub struct ProjCover {
    pub vertices: Vec<usize>,
    pub source: Module,
    pub map: Morphism,
}

/// Injective envelope `m → ⊕_j I(j)^{soc multiplicity}`, vertices ascending.
pub fn injective_envelope(m: &Module) -> InjMap {
    let alg = m.algebra().clone();
    let field = m.field();
    let soc = m.socle_rows();
    let mut vertices = Vec::new();
    let mut map: Option<Morphism> = None;
    for (j, s) in soc.iter().enumerate() {
        if s.rows() == 0 {
            continue;
        }
        // functionals dual to the socle basis: s·Φ = 1
        let phis = exactlin::solve_right(&s.transpose(), &Mat::identity(field, s.rows()))
            .expect("socle basis is independent")
            .transpose();
        for r in 0..s.rows() {
            let phi = phis.select_cols(&[r]);
            let f = map_to_injective(m, j, &phi);
            vertices.push(j);
            map = Some(match map {
                None => f,
                Some(prev) => prev.pair(&f),
            });
        }
    }
    let target = injective_sum(&alg, &vertices);
    let map = map.unwrap_or_else(|| Morphism::zero(m, &target));
    InjMap {
        vertices,
        target,
        map,
    }
}

/// Projective cover `⊕_i P(i)^{top multiplicity} → m`, vertices ascending.
pub fn projective_cover(m: &Module) -> ProjCover {
    let alg = m.algebra().clone();
    let rad = m.radical_rows();
    let mut vertices = Vec::new();
    let mut map: Option<Morphism> = None;
    for (i, r) in rad.iter().enumerate() {
        let q = exactlin::image_quotient(r, m.dim_at(i));
        for t in 0..q.dim() {
            let v = q.section.row_vec(t);
            let f = map_from_projective(m, i, &v);
            vertices.push(i);
            map = Some(match map {
                None => f,
                Some(prev) => copair(&prev, &f),
            });
        }
    }
    let source = projective_sum(&alg, &vertices);
    let map = map.unwrap_or_else(|| Morphism::zero(&source, m));
    ProjCover {
        vertices,
        source,
        map,
    }
}

/// `0 → m → I⁰ → I¹` with `I⁰ = E(m)`, `I¹ = E(Ω⁻¹m)`.
#[derive(Clone, Debug)]
pub struct InjPresentation {
    pub i0: InjMap,
    pub i1: Vec<usize>,
    pub i1_module: Module,
    pub d1: Morphism,
    pub cosyzygy: Module,
    pub second_cosyzygy: Module,
}

pub fn min_inj_presentation(m: &Module) -> InjPresentation {
    let i0 = injective_envelope(m);
    let (cos, pi) = cokernel(&i0.target, &i0.map);
    let env = injective_envelope(&cos);
    let d1 = pi.then(&env.map);
    let (cos2, _) = cokernel(&env.target, &d1);
    InjPresentation {
        i0,
        i1: env.vertices,
        i1_module: env.target,
        d1,
        cosyzygy: cos,
        second_cosyzygy: cos2,
    }
}

/// `P₁ → P₀ → m → 0` with `P₀` the cover of `m` and `P₁` the cover of `Ωm`.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub p0: ProjCover,
    pub p1: Vec<usize>,
    pub p1_module: Module,
    pub d1: Morphism,
    pub syzygy: Module,
}

pub fn min_proj_presentation(m: &Module) -> ProjPresentation {
    let p0 = projective_cover(m);
    let (syz, inc) = kernel(&p0.source, &p0.map);
    let cover = projective_cover(&syz);
    let d1 = cover.map.then(&inc);
    ProjPresentation {
        p0,
        p1: cover.vertices,
        p1_module: cover.source,
        d1,
        syzygy: syz,
    }
}

pub fn syzygy(m: &Module) -> Module {
    let c = projective_cover(m);
    kernel(&c.source, &c.map).0
}

pub fn cosyzygy(m: &Module) -> Module {
    let e = injective_envelope(m);
    cokernel(&e.target, &e.map).0
}

pub fn syzygy_n(m: &Module, k: usize) -> Module {
    (0..k).fold(m.clone(), |acc, _| syzygy(&acc))
}

pub fn cosyzygy_n(m: &Module, k: usize) -> Module {
    (0..k).fold(m.clone(), |acc, _| cosyzygy(&acc))
}

fn total_dims(alg: &Algebra, mult: &[usize], injective: bool) -> usize {
    mult.iter()
        .enumerate()
        .map(|(i, &k)| {
            let d: usize = (0..alg.num_vertices())
                .map(|j| {
                    if injective {
                        alg.block(j, i).len()
                    } else {
                        alg.block(i, j).len()
                    }
                })
                .sum();
            k * d
        })
        .sum()
}

pub fn is_projective(m: &Module) -> bool {
    total_dims(m.algebra(), &m.top_dims(), false) == m.dim()
}

pub fn is_injective(m: &Module) -> bool {
    total_dims(m.algebra(), &m.socle_dims(), true) == m.dim()
}

/// A homological dimension, or a lower bound once the cap is reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    Exactly(usize),
    AtLeast(usize),
}

impl Dimension {
    pub fn at_most(&self, k: usize) -> bool {
        matches!(self, Dimension::Exactly(d) if *d <= k)
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            Dimension::Exactly(d) => Some(*d),
            Dimension::AtLeast(_) => None,
        }
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Exactly(d) => write!(f, "{d}"),
            Dimension::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

pub fn projective_dimension(m: &Module, cap: usize) -> Dimension {
    let mut cur = m.clone();
    for k in 0..=cap {
        if is_projective(&cur) {
            return Dimension::Exactly(k);
        }
        cur = syzygy(&cur);
    }
    Dimension::AtLeast(cap + 1)
}

pub fn injective_dimension(m: &Module, cap: usize) -> Dimension {
    let mut cur = m.clone();
    for k in 0..=cap {
        if is_injective(&cur) {
            return Dimension::Exactly(k);
        }
        cur = cosyzygy(&cur);
    }
    Dimension::AtLeast(cap + 1)
}

/// Maximum projective dimension of the simple modules.
pub fn global_dimension(alg: &Arc<Algebra>, cap: usize) -> Dimension {
    (0..alg.num_vertices())
        .map(|i| projective_dimension(&Module::simple(alg, i), cap))
        .max()
        .unwrap_or(Dimension::Exactly(0))
}

/// Gate for constructions that need `gl.dim ≤ 2`.
pub fn require_gldim_two(alg: &Arc<Algebra>) -> Result<()> {
    match global_dimension(alg, 2) {
        Dimension::Exactly(_) => Ok(()),
        d => Err(Error::GlobalDimensionTooHigh {
            found: d.to_string(),
        }),
    }
}

/// Socle multiplicities of an injective module; fails unless the module is
/// isomorphic (by dimension) to the envelope of its socle.
pub fn decompose_injective(j: &Module) -> Result<Vec<usize>> {
    if !is_injective(j) {
        return Err(Error::NotInjective(format!(
            "module {} is not injective: its socle envelope has a different dimension",
            j.loewy_string()
        )));
    }
    Ok(j.socle_dims())
}

/// Top multiplicities of a projective module.
pub fn decompose_projective(p: &Module) -> Result<Vec<usize>> {
    if !is_projective(p) {
        return Err(Error::NotProjective(format!(
            "module {} is not projective: its cover has a different dimension",
            p.loewy_string()
        )));
    }
    Ok(p.top_dims())
}

/// Expands multiplicities into an ascending vertex list.
pub fn multiplicities_to_vertices(mult: &[usize]) -> Vec<usize> {
    mult.iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i, k))
        .collect()
}

pub fn vertices_to_multiplicities(n: usize, vertices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n];
    for &v in vertices {
        out[v] += 1;
    }
    out
}
