//! `C`-`C`-bimodules with vertex-tagged bases, and `E = Ext²_C(DC, C)`.

use std::sync::Arc;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::homfun::{
    ext_projective, hom_into, lift_morphism, nakayama, projective_resolution, tau, tau_inverse,
    Cohomology, ProjMap,
};
use crate::modrep::{
    are_isomorphic, cosyzygy, dual_regular, injective, projective, regular, require_gldim_two,
    syzygy, Module, Morphism,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiBasis {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A bimodule over `alg`; basis element `x` lies in `e_source · X · e_target`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    alg: Arc<Algebra>,
    basis: Vec<BiBasis>,
    /// `left[c][x] = c·x`.
    left: Vec<Vec<Elem>>,
    /// `right[x][c] = x·c`.
    right: Vec<Vec<Elem>>,
}

fn coeff(x: &Elem, k: usize) -> Option<&crate::exactlin::Scalar> {
    x.iter().find(|(j, _)| *j == k).map(|(_, c)| c)
}

impl Bimodule {
    pub fn from_parts(
        alg: Arc<Algebra>,
        basis: Vec<BiBasis>,
        left: Vec<Vec<Elem>>,
        right: Vec<Vec<Elem>>,
    ) -> Self {
        Bimodule {
            alg,
            basis,
            left,
            right,
        }
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        Bimodule {
            alg: alg.clone(),
            basis: Vec::new(),
            left: vec![Vec::new(); alg.dim()],
            right: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[BiBasis] {
        &self.basis
    }
    pub fn left(&self, c: usize, x: usize) -> &Elem {
        &self.left[c][x]
    }
    pub fn right(&self, x: usize, c: usize) -> &Elem {
        &self.right[x][c]
    }

    /// `c·x` for an algebra element `a`.
    pub fn left_elem(&self, a: &Elem, x: usize) -> Elem {
        a.iter().fold(Vec::new(), |acc, (c, s)| {
            crate::algebra::elem_add(&acc, &crate::algebra::elem_scale(&self.left[*c][x], s))
        })
    }

    /// `x·a` for an algebra element `a`.
    pub fn right_elem(&self, x: usize, a: &Elem) -> Elem {
        a.iter().fold(Vec::new(), |acc, (c, s)| {
            crate::algebra::elem_add(&acc, &crate::algebra::elem_scale(&self.right[x][*c], s))
        })
    }

    fn select(&self, pred: impl Fn(&BiBasis) -> bool) -> Vec<usize> {
        (0..self.dim()).filter(|&x| pred(&self.basis[x])).collect()
    }

    /// Right module on the subspace `filter`, graded by target.
    fn right_on(&self, filter: impl Fn(&BiBasis) -> bool + Copy) -> Module {
        let alg = &self.alg;
        let field = alg.field();
        let by_v: Vec<Vec<usize>> = (0..alg.num_vertices())
            .map(|v| self.select(|b| filter(b) && b.target == v))
            .collect();
        let dims = by_v.iter().map(Vec::len).collect();
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(c, e)| {
                let (rows, cols) = (&by_v[e.source], &by_v[e.target]);
                let mut m = Mat::zeros(field, rows.len(), cols.len());
                for (p, &x) in rows.iter().enumerate() {
                    for (q, &y) in cols.iter().enumerate() {
                        if let Some(s) = coeff(&self.right[x][c], y) {
                            m.set(p, q, s.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Module::from_parts(alg.clone(), dims, act)
    }

    /// Dual of the left structure on the subspace `filter`, graded by source.
    fn dual_left_on(&self, filter: impl Fn(&BiBasis) -> bool + Copy) -> Module {
        let alg = &self.alg;
        let field = alg.field();
        let by_k: Vec<Vec<usize>> = (0..alg.num_vertices())
            .map(|k| self.select(|b| filter(b) && b.source == k))
            .collect();
        let dims = by_k.iter().map(Vec::len).collect();
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(c, e)| {
                // (φ·c)(x) = φ(c·x)
                let (rows, cols) = (&by_k[e.source], &by_k[e.target]);
                let mut m = Mat::zeros(field, rows.len(), cols.len());
                for (q, &x) in cols.iter().enumerate() {
                    for (p, &y) in rows.iter().enumerate() {
                        if let Some(s) = coeff(&self.left[c][x], y) {
                            m.set(p, q, s.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Module::from_parts(alg.clone(), dims, act)
    }

    /// The underlying right module `X_C`.
    pub fn right_module(&self) -> Module {
        self.right_on(|_| true)
    }

    /// `e_k X` as a right module.
    pub fn left_part(&self, k: usize) -> Module {
        self.right_on(|b| b.source == k)
    }

    /// `D(_C X)`, a right module.
    pub fn dual_left_module(&self) -> Module {
        self.dual_left_on(|_| true)
    }

    /// `D(X e_v) ≅ Hom_C(X, I(v))`.
    pub fn dual_part(&self, v: usize) -> Module {
        self.dual_left_on(|b| b.target == v)
    }

    /// Left multiplication by `a ∈ e_i C e_j`, as a map `e_j X → e_i X`.
    pub fn left_map(&self, a: &Elem, i: usize, j: usize) -> Morphism {
        let field = self.alg.field();
        let blocks = (0..self.alg.num_vertices())
            .map(|v| {
                let rows = self.select(|b| b.source == j && b.target == v);
                let cols = self.select(|b| b.source == i && b.target == v);
                let mut m = Mat::zeros(field, rows.len(), cols.len());
                for (p, &x) in rows.iter().enumerate() {
                    let img = self.left_elem(a, x);
                    for (q, &y) in cols.iter().enumerate() {
                        if let Some(s) = coeff(&img, y) {
                            m.set(p, q, s.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Morphism { blocks }
    }

    /// For `a ∈ e_w C e_v`, the map `D(X e_v) → D(X e_w)`, `φ ↦ φ(−·a)`.
    pub fn dual_right_map(&self, a: &Elem, v: usize, w: usize) -> Morphism {
        let field = self.alg.field();
        let blocks = (0..self.alg.num_vertices())
            .map(|k| {
                let rows = self.select(|b| b.source == k && b.target == v);
                let cols = self.select(|b| b.source == k && b.target == w);
                let mut m = Mat::zeros(field, rows.len(), cols.len());
                for (q, &x) in cols.iter().enumerate() {
                    let img = self.right_elem(x, a);
                    for (p, &y) in rows.iter().enumerate() {
                        if let Some(s) = coeff(&img, y) {
                            m.set(p, q, s.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Morphism { blocks }
    }

    /// Units, associativity of both actions, and their commutation.
    pub fn check(&self) -> Result<()> {
        let alg = &self.alg;
        let n = alg.dim();
        let bad = |what: &str| Err(Error::BimoduleInvalid(what.to_string()));
        for x in 0..self.dim() {
            let bx = &self.basis[x];
            for (i, &e) in alg.idempotents().iter().enumerate() {
                let unit = vec![(x, alg.field().one())];
                let want_l = if bx.source == i {
                    unit.clone()
                } else {
                    Vec::new()
                };
                let want_r = if bx.target == i { unit } else { Vec::new() };
                if self.left[e][x] != want_l || self.right[x][e] != want_r {
                    return bad("idempotents do not act as units");
                }
            }
        }
        for x in 0..self.dim() {
            for c in 0..n {
                for d in 0..n {
                    // (c·x)·d = c·(x·d)
                    let lhs = self.left[c][x].iter().fold(Vec::new(), |acc, (y, s)| {
                        crate::algebra::elem_add(
                            &acc,
                            &crate::algebra::elem_scale(&self.right[*y][d], s),
                        )
                    });
                    let rhs = self.right[x][d].iter().fold(Vec::new(), |acc, (y, s)| {
                        crate::algebra::elem_add(
                            &acc,
                            &crate::algebra::elem_scale(&self.left[c][*y], s),
                        )
                    });
                    if lhs != rhs {
                        return bad("left and right actions do not commute");
                    }
                    // x·(cd) = (x·c)·d and (cd)·x = c·(d·x)
                    let cd = alg.mul_basis(c, d);
                    let r1 = self.right_elem(x, cd);
                    let r2 = self.right[x][c].iter().fold(Vec::new(), |acc, (y, s)| {
                        crate::algebra::elem_add(
                            &acc,
                            &crate::algebra::elem_scale(&self.right[*y][d], s),
                        )
                    });
                    if r1 != r2 {
                        return bad("right action is not associative");
                    }
                    let l1 = self.left_elem(cd, x);
                    let l2 = self.left[d][x].iter().fold(Vec::new(), |acc, (y, s)| {
                        crate::algebra::elem_add(
                            &acc,
                            &crate::algebra::elem_scale(&self.left[c][*y], s),
                        )
                    });
                    if l1 != l2 {
                        return bad("left action is not associative");
                    }
                }
            }
        }
        Ok(())
    }

    /// The same space as a bimodule over the opposite algebra.
    pub fn opposite(&self, op: &Arc<Algebra>) -> Bimodule {
        let n = self.alg.dim();
        let basis = self
            .basis
            .iter()
            .map(|b| BiBasis {
                source: b.target,
                target: b.source,
                label: format!("{}^op", b.label),
            })
            .collect();
        let left = (0..n)
            .map(|c| (0..self.dim()).map(|x| self.right[x][c].clone()).collect())
            .collect();
        let right = (0..self.dim())
            .map(|x| (0..n).map(|c| self.left[c][x].clone()).collect())
            .collect();
        Bimodule {
            alg: op.clone(),
            basis,
            left,
            right,
        }
    }
}

/// `E = Ext²_C(DC, C)`: the right action comes from the left structure of
/// `DC` (precomposition with lifted maps), the left action from the left
/// structure of `C` (postcomposition). Requires `gl.dim C ≤ 2` and checks
/// `E_C ≅ τ⁻¹Ω⁻¹C` and `D(_C E) ≅ τΩ(DC)`.
pub fn compute_e(c: &Arc<Algebra>, seed: u64) -> Result<Bimodule> {
    let e = compute_e_unchecked(c)?;
    let right = e.right_module();
    let want = tau_inverse(&cosyzygy(&regular(c)))?;
    let v = are_isomorphic(&right, &want, seed);
    if !v.is_yes() {
        return Err(Error::HypothesisViolation(format!(
            "E is not isomorphic to τ⁻¹Ω⁻¹C as a right module ({})",
            v.label()
        )));
    }
    let dual = e.dual_left_module();
    let want = tau(&syzygy(&dual_regular(c)));
    let v = are_isomorphic(&dual, &want, seed);
    if !v.is_yes() {
        return Err(Error::HypothesisViolation(format!(
            "DE is not isomorphic to τΩ(DC) ({})",
            v.label()
        )));
    }
    Ok(e)
}

pub fn compute_e_unchecked(c: &Arc<Algebra>) -> Result<Bimodule> {
    require_gldim_two(c)?;
    let nv = c.num_vertices();
    let field = c.field();
    let res: Vec<_> = (0..nv)
        .map(|v| projective_resolution(&injective(c, v), 3))
        .collect();
    let proj: Vec<Module> = (0..nv).map(|u| projective(c, u)).collect();
    // coh[u][v] = Ext²(I(v), P(u))
    let coh: Vec<Vec<Cohomology>> = (0..nv)
        .map(|u| {
            (0..nv)
                .map(|v| ext_projective(&res[v], &proj[u], 2))
                .collect()
        })
        .collect();

    let mut basis = Vec::new();
    let mut index = vec![vec![Vec::new(); nv]; nv];
    for u in 0..nv {
        for v in 0..nv {
            let d = coh[u][v].dim();
            for k in 0..d {
                let mut label = format!("ext_{}_{}", c.vertex_label(u), c.vertex_label(v));
                if d > 1 {
                    label.push_str(&format!("_{k}"));
                }
                index[u][v].push(basis.len());
                basis.push(BiBasis {
                    source: u,
                    target: v,
                    label,
                });
            }
        }
    }
    let dim = basis.len();
    let to_elem = |row: &[crate::exactlin::Scalar], idx: &[usize]| -> Elem {
        row.iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(k, s)| (idx[k], s.clone()))
            .collect()
    };

    let mut left = vec![vec![Vec::new(); dim]; c.dim()];
    for (ci, ce) in c.basis().iter().enumerate() {
        let (k, u) = (ce.source, ce.target);
        let lm = ProjMap {
            source: vec![u],
            target: vec![k],
            entries: vec![vec![c.basis_elem_as_elem(ci)]],
        }
        .to_morphism(c);
        for v in 0..nv {
            if coh[u][v].dim() == 0 || coh[k][v].dim() == 0 {
                continue;
            }
            // Hom(Q₂, P(u)) → Hom(Q₂, P(k)), blockwise over the summands of Q₂
            let q2 = res[v].term(2);
            let mut post = Mat::zeros(field, 0, 0);
            for &i in q2 {
                post = post.direct_sum(&lm.blocks[i]);
            }
            let img = coh[k][v].classes(&coh[u][v].representatives().mul(&post));
            for (p, &x) in index[u][v].iter().enumerate() {
                left[ci][x] = to_elem(img.row(p), &index[k][v]);
            }
        }
    }

    let mut right = vec![vec![Vec::new(); c.dim()]; dim];
    for (ci, ce) in c.basis().iter().enumerate() {
        let (v, j) = (ce.source, ce.target);
        if (0..nv).all(|u| coh[u][v].dim() == 0 || coh[u][j].dim() == 0) {
            continue;
        }
        let lam = nakayama(
            c,
            &ProjMap {
                source: vec![j],
                target: vec![v],
                entries: vec![vec![c.basis_elem_as_elem(ci)]],
            },
        );
        let chain = lift_morphism(&lam, &res[j], &res[v], 2)?;
        for u in 0..nv {
            if coh[u][v].dim() == 0 || coh[u][j].dim() == 0 {
                continue;
            }
            let pull = hom_into(&chain[2], &proj[u]);
            let img = coh[u][j].classes(&coh[u][v].representatives().mul(&pull));
            for (p, &x) in index[u][v].iter().enumerate() {
                right[x][ci] = to_elem(img.row(p), &index[u][j]);
            }
        }
    }
    let e = Bimodule::from_parts(c.clone(), basis, left, right);
    e.check()?;
    Ok(e)
}
