//! The injective terms of the presentation of an induced module.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{self, Mat};
use crate::homfun::{nakayama, presentation_map, tau, tau_inverse, ProjMap};
use crate::modrep::{
    are_isomorphic, cokernel, cosyzygy, decompose_injective, hom_basis, injective,
    injective_dimension, injective_envelope, injective_sum, kernel, min_inj_presentation,
    min_proj_presentation, projective_dimension, random_combination, syzygy,
    vertices_to_multiplicities, Dimension, Module, Morphism,
};
use crate::relext::ExtensionContext;

/// Which shape of the general presentation applies to `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// `m` injective: `0 → M⊗B → I ⊕ Ī⁰ → Î`.
    Injective,
    /// `id m = 1`, `pd m ≤ 1`: the minimal presentation lifts unchanged.
    IdOne,
    /// `id m = 2`, `pd m ≤ 1`.
    PdAtMostOne,
    /// `pd m = 2`: `0 → M → I⁰ → I¹ ⊕ Î`.
    PdTwo,
}

impl std::fmt::Display for Clause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Clause::Injective => "injective",
            Clause::IdOne => "id-one",
            Clause::PdAtMostOne => "pd-at-most-one",
            Clause::PdTwo => "pd-two",
        })
    }
}

/// Terms as per-vertex multiplicities; `left = i0 + i0_bar` and
/// `right = tilde + i1_bar + hat`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremTerms {
    pub clause: Clause,
    pub pd: usize,
    pub id: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
    pub i0_bar: Vec<usize>,
    pub i1_bar: Vec<usize>,
    pub tilde: Vec<usize>,
    pub hat: Vec<usize>,
}

fn add(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn exact_dim(d: Dimension, what: &str) -> Result<usize> {
    match d {
        Dimension::Exactly(k) if k <= 2 => Ok(k),
        d => Err(Error::GlobalDimensionTooHigh {
            found: format!("{what} {d}"),
        }),
    }
}

/// `ν⁻¹x = Hom_C(DC, x)`, with `Hom(I(v), x)` at vertex `v`.
pub fn nu_inverse_module(x: &Module) -> Module {
    nu_inverse_data(x).0
}

/// `ν⁻¹x` together with the basis of `Hom(I(v), x)` behind each vertex.
fn nu_inverse_data(x: &Module) -> (Module, Vec<Vec<Morphism>>) {
    let c = x.algebra();
    let field = c.field();
    let nv = c.num_vertices();
    let bases: Vec<Vec<Morphism>> = (0..nv).map(|v| hom_basis(&injective(c, v), x)).collect();
    let flat = |h: &Morphism| -> Vec<_> {
        h.blocks
            .iter()
            .flat_map(|b| b.entries().cloned().collect::<Vec<_>>())
            .collect()
    };
    let mats: Vec<Mat> = bases
        .iter()
        .enumerate()
        .map(|(v, bs)| {
            let cols = (0..nv).map(|u| c.block(u, v).len() * x.dim_at(u)).sum();
            Mat::from_rows(field, cols, bs.iter().map(flat).collect())
        })
        .collect();
    let act = c
        .basis()
        .iter()
        .enumerate()
        .map(|(ci, e)| {
            let (i, j) = (e.source, e.target);
            let mut out = Mat::zeros(field, bases[i].len(), bases[j].len());
            if out.rows() == 0 || out.cols() == 0 {
                return out;
            }
            // f ↦ ν(c)·f with ν(c): I(j) → I(i)
            let nu = nakayama(
                c,
                &ProjMap {
                    source: vec![j],
                    target: vec![i],
                    entries: vec![vec![c.basis_elem_as_elem(ci)]],
                },
            );
            for (p, f) in bases[i].iter().enumerate() {
                let g = nu.then(f);
                let row = Mat::from_rows(field, mats[j].cols(), vec![flat(&g)]);
                let coords =
                    exactlin::solve_right(&mats[j], &row).expect("composite is a morphism");
                for q in 0..coords.cols() {
                    out.set(p, q, coords.get(0, q).clone());
                }
            }
            out
        })
        .collect();
    let m = Module::from_parts(c.clone(), bases.iter().map(Vec::len).collect(), act);
    (m, bases)
}

/// `ν y` for a module `y`, as the cokernel of `ν` of its presentation.
pub fn nu_module(y: &Module) -> Module {
    let c = y.algebra();
    if y.is_zero() {
        return Module::zero(c);
    }
    let pm = presentation_map(y);
    let f = nakayama(c, &pm);
    cokernel(&injective_sum(c, &pm.target), &f).0
}

/// A random monomorphism `src → tgt`, if one turns up.
pub(crate) fn random_mono(
    src: &Module,
    tgt: &Module,
    seed: u64,
    trials: usize,
) -> Option<Morphism> {
    if src.is_zero() {
        return Some(Morphism::zero(src, tgt));
    }
    let basis = hom_basis(src, tgt);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).find_map(|t| {
        random_combination(&mut rng, src.field(), &basis, 1 + t as i64 / 8)
            .filter(Morphism::is_mono)
    })
}

/// `Ĩ = νν⁻¹Ω⁻¹m` with its socle multiplicities. Also checks that the
/// evaluation `Ĩ → Ω⁻¹m` is onto with kernel `≅ τΩτ⁻¹Ω⁻¹m`.
pub fn tilde_injective(m: &Module, seed: u64) -> Result<(Module, Vec<usize>)> {
    let c = m.algebra();
    crate::modrep::require_gldim_two(c)?;
    let field = c.field();
    let x = cosyzygy(m);
    let (y, bases) = nu_inverse_data(&x);
    let pp = min_proj_presentation(&y);
    let pm = ProjMap::from_morphism(c, &pp.d1, &pp.p1, &pp.p0.vertices);
    let nu_d = nakayama(c, &pm);
    let j0 = injective_sum(c, &pp.p0.vertices);
    let (t, proj) = cokernel(&j0, &nu_d);
    let mult = decompose_injective(&t)
        .map_err(|e| Error::HypothesisViolation(format!("νν⁻¹Ω⁻¹M is not injective: {e}")))?;

    // evaluation ⊕ I(v_r) → x: the generator of P(v_r) is a map I(v_r) → x
    let mut eps: Vec<Mat> = (0..c.num_vertices())
        .map(|u| Mat::zeros(field, 0, x.dim_at(u)))
        .collect();
    for (r, &v) in pp.p0.vertices.iter().enumerate() {
        let row = pp.p0.map.blocks[v]
            .row(ProjMap::generator_row(c, &pp.p0.vertices, r))
            .to_vec();
        let f = bases[v]
            .iter()
            .zip(&row)
            .fold(Morphism::zero(&injective(c, v), &x), |acc, (h, s)| {
                acc.add(&h.scale(s))
            });
        for u in 0..eps.len() {
            eps[u] = eps[u].vstack(&f.blocks[u]);
        }
    }
    let eps = Morphism { blocks: eps };
    if !nu_d.then(&eps).is_zero() {
        return Err(Error::HypothesisViolation(
            "evaluation does not factor through νν⁻¹Ω⁻¹M".into(),
        ));
    }
    let bar = Morphism {
        blocks: (0..eps.blocks.len())
            .map(|u| {
                let pu = &proj.blocks[u];
                if pu.cols() == 0 {
                    return Mat::zeros(field, 0, x.dim_at(u));
                }
                exactlin::solve_right(pu, &Mat::identity(field, pu.cols()))
                    .expect("cokernel map is onto")
                    .mul(&eps.blocks[u])
            })
            .collect(),
    };
    if !bar.is_epi() {
        return Err(Error::HypothesisViolation(
            "evaluation νν⁻¹Ω⁻¹M → Ω⁻¹M is not onto".into(),
        ));
    }
    let (k, _) = kernel(&t, &bar);
    let want = tau(&syzygy(&tau_inverse(&x)?));
    let v = are_isomorphic(&k, &want, seed);
    if !v.is_yes() {
        return Err(Error::HypothesisViolation(format!(
            "kernel of νν⁻¹Ω⁻¹M → Ω⁻¹M is not τΩτ⁻¹Ω⁻¹M ({}, dims {:?} vs {:?})",
            v.label(),
            k.dims(),
            want.dims()
        )));
    }
    Ok((t, mult))
}

/// Terms `J⁰ = I⁰ ⊕ Ī⁰` and `J¹ = Ĩ ⊕ Ī¹ ⊕ Î` of an injective presentation
/// of `m ⊗_C B`, where `I`, `Ī` come from the minimal presentations of `m`
/// and `m ⊗ E`, and `Î` is the envelope of `Hom_C(E, m) ≅ τΩm`.
pub fn theorem_terms(m: &Module, ctx: &ExtensionContext, seed: u64) -> Result<TheoremTerms> {
    let nv = ctx.c.num_vertices();
    let pd = exact_dim(projective_dimension(m, 2), "pd")?;
    let id = exact_dim(injective_dimension(m, 2), "id")?;
    let clause =
        match (pd, id) {
            (2, 2) => return Err(Error::HypothesisViolation(
                "pd M = id M = 2, impossible for an indecomposable module over a tilted algebra"
                    .into(),
            )),
            (2, _) => Clause::PdTwo,
            (_, 0) => Clause::Injective,
            (_, 1) => Clause::IdOne,
            _ => Clause::PdAtMostOne,
        };
    let ip = min_inj_presentation(m);
    let i0 = vertices_to_multiplicities(nv, &ip.i0.vertices);
    let i1 = vertices_to_multiplicities(nv, &ip.i1);

    let te = ctx.tensor_e(m, seed)?;
    let (i0_bar, i1_bar) = if te.is_zero() {
        (vec![0; nv], vec![0; nv])
    } else {
        if !injective_dimension(&te, 2).at_most(1) {
            return Err(Error::HypothesisViolation("id M ⊗ E > 1".into()));
        }
        let p = min_inj_presentation(&te);
        (
            vertices_to_multiplicities(nv, &p.i0.vertices),
            vertices_to_multiplicities(nv, &p.i1),
        )
    };
    let (_, tilde) = tilde_injective(m, seed)?;
    if id <= 1 && tilde != i1 {
        return Err(Error::HypothesisViolation(
            "νν⁻¹Ω⁻¹M differs from I¹ although id M ≤ 1".into(),
        ));
    }
    let he = ctx.cohom_e(m, seed)?;
    if !projective_dimension(&he, 2).at_most(1) {
        return Err(Error::HypothesisViolation("pd Hom(E, M) > 1".into()));
    }
    let hat = injective_envelope(&he).vertices;
    let hat = vertices_to_multiplicities(nv, &hat);
    Ok(TheoremTerms {
        clause,
        pd,
        id,
        left: add(&i0, &i0_bar),
        right: add(&add(&tilde, &i1_bar), &hat),
        i0,
        i1,
        i0_bar,
        i1_bar,
        tilde,
        hat,
    })
}
