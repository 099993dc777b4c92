//! Duality, transpose and the Auslander–Reiten translations.

use std::sync::Arc;

use super::nakayama::{nakayama, nakayama_inverse};
use super::projmap::ProjMap;
use crate::algebra::Algebra;
use crate::error::Result;
use crate::modrep::{cokernel, kernel, min_inj_presentation, min_proj_presentation, Module};

/// `D m` as a module over `op` (the opposite algebra of `m`'s algebra, with
/// the same basis order).
pub fn dualize(m: &Module, op: &Arc<Algebra>) -> Module {
    let act = (0..m.algebra().dim())
        .map(|b| m.action(b).transpose())
        .collect();
    Module::from_parts(op.clone(), m.dims().to_vec(), act)
}

/// Symbolic form of the second map of the minimal projective presentation.
pub fn presentation_map(m: &Module) -> ProjMap {
    let p = min_proj_presentation(m);
    ProjMap::from_morphism(m.algebra(), &p.d1, &p.p1, &p.p0.vertices)
}

/// `τ m = ker(νP₁ → νP₀)`.
pub fn tau(m: &Module) -> Module {
    let alg = m.algebra();
    let pm = presentation_map(m);
    let f = nakayama(alg, &pm);
    let src = crate::modrep::injective_sum(alg, &pm.source);
    kernel(&src, &f).0
}

/// `τ⁻¹ m = coker(ν⁻¹I⁰ → ν⁻¹I¹)`.
pub fn tau_inverse(m: &Module) -> Result<Module> {
    let alg = m.algebra();
    let ip = min_inj_presentation(m);
    let pm = nakayama_inverse(alg, &ip.d1, &ip.i0.vertices, &ip.i1)?;
    let f = pm.to_morphism(alg);
    let tgt = crate::modrep::projective_sum(alg, &pm.target);
    Ok(cokernel(&tgt, &f).0)
}

/// `Tr m` over the opposite algebra `op`: the cokernel of
/// `Hom(P₀, A) → Hom(P₁, A)`.
pub fn transpose(m: &Module, op: &Arc<Algebra>) -> Module {
    let pm = presentation_map(m);
    // Hom(P(w), A) = A e_w is P_op(w); y ↦ y·a becomes multiplication by a^op
    let mut dual = ProjMap::zero(pm.target.clone(), pm.source.clone());
    for r in 0..pm.source.len() {
        for s in 0..pm.target.len() {
            dual.entries[s][r] = pm.entries[r][s].clone();
        }
    }
    let f = dual.to_morphism(op);
    let tgt = crate::modrep::projective_sum(op, &dual.target);
    cokernel(&tgt, &f).0
}

/// `D Tr m`, which is isomorphic to `τ m`.
pub fn d_tr(m: &Module, op: &Arc<Algebra>) -> Module {
    dualize(&transpose(m, op), m.algebra())
}

/// `Tr D m` over `m`'s algebra, which is isomorphic to `τ⁻¹ m`.
pub fn tr_d(m: &Module, op: &Arc<Algebra>) -> Module {
    transpose(&dualize(m, op), m.algebra())
}
