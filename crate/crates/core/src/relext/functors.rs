//! Change of rings along `C → B → C` and the functors `− ⊗_C E`,
//! `Hom_C(E, −)`.

use super::context::ExtensionContext;
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat};
use crate::homfun::{
    ext_right_module, nakayama, nakayama_inverse, presentation_map, tau, tau_inverse, ProjMap,
};
use crate::modrep::{
    are_isomorphic, cokernel, cosyzygy, injective_sum, kernel, min_inj_presentation,
    projective_sum, syzygy, IsoVerdict, Module, Morphism,
};

impl ExtensionContext {
    /// `m` as a `B`-module on which `E` acts as zero.
    pub fn inflate(&self, m: &Module) -> Module {
        m.inflate(&self.b, &self.sigma)
    }

    /// Restriction of scalars along `σ`.
    pub fn restrict(&self, x: &Module) -> Module {
        x.restrict(&self.c, &self.sigma)
    }

    /// `m ⊗_C B`: the cokernel of the presentation of `m` pushed along `σ`.
    pub fn induce(&self, m: &Module) -> Module {
        let pm = presentation_map(m);
        let sigma = &self.sigma;
        let pb = pm.map_entries(|k| sigma[k]);
        let f = pb.to_morphism(&self.b);
        cokernel(&projective_sum(&self.b, &pb.target), &f).0
    }

    /// `Hom_C(B, m)`: the kernel of the copresentation of `m` pushed along `σ`.
    pub fn coinduce(&self, m: &Module) -> Result<Module> {
        let ip = min_inj_presentation(m);
        let pm = nakayama_inverse(&self.c, &ip.d1, &ip.i0.vertices, &ip.i1)?;
        let sigma = &self.sigma;
        let g = nakayama(&self.b, &pm.map_entries(|k| sigma[k]));
        Ok(kernel(&injective_sum(&self.b, &ip.i0.vertices), &g).0)
    }

    /// `m ⊗_C E` without the identity check.
    pub fn tensor_e_raw(&self, m: &Module) -> Module {
        let pm = presentation_map(m);
        let e = &self.e;
        let src = Module::direct_sum_all(
            &self.c,
            &pm.source
                .iter()
                .map(|&v| e.left_part(v))
                .collect::<Vec<_>>(),
        );
        let blocks = block_map(
            &self.c,
            &pm,
            |a, r, s| e.left_map(a, pm.target[s], pm.source[r]),
            |v| e.left_part(v),
        );
        let f = Morphism { blocks };
        let tgt = Module::direct_sum_all(
            &self.c,
            &pm.target
                .iter()
                .map(|&v| e.left_part(v))
                .collect::<Vec<_>>(),
        );
        debug_assert!(f.intertwines(&src, &tgt));
        cokernel(&tgt, &f).0
    }

    /// `D(E ⊗_C Dm) ≅ Hom_C(E, m)` without the identity check.
    pub fn cohom_e_raw(&self, m: &Module) -> Result<Module> {
        let ip = min_inj_presentation(m);
        let pm = nakayama_inverse(&self.c, &ip.d1, &ip.i0.vertices, &ip.i1)?;
        let e = &self.e;
        let blocks = block_map(
            &self.c,
            &pm,
            |a, r, s| e.dual_right_map(a, pm.source[r], pm.target[s]),
            |v| e.dual_part(v),
        );
        let src = Module::direct_sum_all(
            &self.c,
            &pm.source
                .iter()
                .map(|&v| e.dual_part(v))
                .collect::<Vec<_>>(),
        );
        Ok(kernel(&src, &Morphism { blocks }).0)
    }

    /// `m ⊗_C E`, checked against `τ⁻¹Ω⁻¹m`.
    pub fn tensor_e(&self, m: &Module, seed: u64) -> Result<Module> {
        let t = self.tensor_e_raw(m);
        let want = tau_inverse(&cosyzygy(m))?;
        require_iso(&t, &want, seed, "M ⊗ E ≅ τ⁻¹Ω⁻¹M")?;
        Ok(t)
    }

    /// `Hom_C(E, m)`, checked against `τΩm`.
    pub fn cohom_e(&self, m: &Module, seed: u64) -> Result<Module> {
        let h = self.cohom_e_raw(m)?;
        let want = tau(&syzygy(m));
        require_iso(&h, &want, seed, "Hom(E, M) ≅ τΩM")?;
        Ok(h)
    }

    /// `Ext^k_C(E, m)` as a right `C`-module.
    pub fn ext_e(&self, m: &Module, k: usize) -> Result<Module> {
        let c = &self.c;
        let parts: Vec<Module> = (0..c.num_vertices()).map(|v| self.e.left_part(v)).collect();
        let left = |ci: usize| {
            let b = c.basis_elem(ci);
            self.e
                .left_map(&c.basis_elem_as_elem(ci), b.source, b.target)
        };
        ext_right_module(c, &parts, &left, m, k)
    }

    /// The submodule `x·ι(E)` as row bases per vertex.
    fn e_rows(&self, x: &Module) -> Vec<Mat> {
        let field = self.b.field();
        let mut rows: Vec<Mat> = x.dims().iter().map(|&d| Mat::zeros(field, 0, d)).collect();
        for &k in &self.iota {
            let be = self.b.basis_elem(k);
            rows[be.target] = rows[be.target].vstack(x.action(k));
        }
        rows.iter().map(exactlin::row_basis).collect()
    }

    /// `Some((n, iso))` when `x ≅ n ⊗_C B` with `n = x / x·E`, otherwise the
    /// verdict that separates them.
    pub fn detect_induced(
        &self,
        x: &Module,
        seed: u64,
    ) -> std::result::Result<(Module, Morphism), IsoVerdict> {
        let (q, _) = x.quotient(&self.e_rows(x));
        let n = self.restrict(&q);
        match are_isomorphic(&self.induce(&n), x, seed) {
            IsoVerdict::Yes(f) => Ok((n, f)),
            v => Err(v),
        }
    }
}

/// Per-vertex block matrix of a map `⊕ F(v_r) → ⊕ F(w_s)` whose `(r, s)`
/// component is `comp(a_rs, r, s)`.
fn block_map(
    alg: &crate::algebra::Algebra,
    pm: &ProjMap,
    comp: impl Fn(&crate::algebra::Elem, usize, usize) -> Morphism,
    part: impl Fn(usize) -> Module,
) -> Vec<Mat> {
    let field = alg.field();
    let src: Vec<Module> = pm.source.iter().map(|&v| part(v)).collect();
    let tgt: Vec<Module> = pm.target.iter().map(|&w| part(w)).collect();
    (0..alg.num_vertices())
        .map(|u| {
            let rows: Vec<usize> = src.iter().map(|m| m.dim_at(u)).collect();
            let cols: Vec<usize> = tgt.iter().map(|m| m.dim_at(u)).collect();
            let mut blk = Mat::zeros(field, rows.iter().sum(), cols.iter().sum());
            let mut ro = 0;
            for r in 0..src.len() {
                let mut co = 0;
                for s in 0..tgt.len() {
                    let a = &pm.entries[r][s];
                    if !a.is_empty() && rows[r] > 0 && cols[s] > 0 {
                        blk.paste(ro, co, &comp(a, r, s).blocks[u]);
                    }
                    co += cols[s];
                }
                ro += rows[r];
            }
            blk
        })
        .collect()
}

fn require_iso(m: &Module, n: &Module, seed: u64, what: &str) -> Result<()> {
    match are_isomorphic(m, n, seed) {
        IsoVerdict::Yes(_) => Ok(()),
        v => Err(Error::HypothesisViolation(format!(
            "{what} fails ({})",
            v.label()
        ))),
    }
}
