//! Split extensions `0 → E → B → C → 0` with a chosen section `σ: C → B`.

use std::sync::Arc;

use super::bimodule::{compute_e, BiBasis, Bimodule};
use crate::algebra::{
    apply_cut, build_algebra, Algebra, BasisElem, BoundQuiver, Cut, Elem, Provenance,
};
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat};
use crate::modrep::{are_isomorphic, Module};

/// `B = C ⊕ E` with `σ` embedding the basis of `C` and `ι` that of `E`.
#[derive(Clone, Debug)]
pub struct ExtensionContext {
    pub name: String,
    pub c: Arc<Algebra>,
    pub b: Arc<Algebra>,
    pub e: Bimodule,
    /// `sigma[k]` is the `B`-index of `C`-basis element `k`.
    pub sigma: Vec<usize>,
    /// `iota[x]` is the `B`-index of `E`-basis element `x`.
    pub iota: Vec<usize>,
    /// For contexts read off a cut: the algebra of the original presentation.
    pub ambient: Option<Ambient>,
}

/// Mutually inverse basis changes between `B` and an isomorphic algebra.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub alg: Arc<Algebra>,
    /// Basis element `k` of the ambient algebra, written in `B`.
    pub to_b: Vec<Elem>,
    /// Basis element `k` of `B`, written in the ambient algebra.
    pub from_b: Vec<Elem>,
}

/// `images[k]` is basis element `k` of `target`, written in `x`'s algebra.
fn transport(x: &Module, target: &Arc<Algebra>, images: &[Elem]) -> Module {
    let act = images
        .iter()
        .zip(target.basis())
        .map(|(a, e)| x.act_elem(a, e.source, e.target))
        .collect();
    Module::from_parts(target.clone(), x.dims().to_vec(), act)
}

impl ExtensionContext {
    /// Projection `π: B → C` on basis elements (`None` on `ι(E)`).
    pub fn pi(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.b.dim()];
        for (k, &s) in self.sigma.iter().enumerate() {
            out[s] = Some(k);
        }
        out
    }

    /// The algebra modules are exchanged in: the ambient one if present.
    pub fn ambient_algebra(&self) -> &Arc<Algebra> {
        self.ambient.as_ref().map_or(&self.b, |a| &a.alg)
    }

    /// A module over the ambient algebra, as a `B`-module.
    pub fn from_ambient(&self, x: &Module) -> Module {
        match &self.ambient {
            None => x.clone(),
            Some(a) => transport(x, &self.b, &a.from_b),
        }
    }

    /// A `B`-module, as a module over the ambient algebra.
    pub fn to_ambient(&self, x: &Module) -> Module {
        match &self.ambient {
            None => x.clone(),
            Some(a) => transport(x, &a.alg, &a.to_b),
        }
    }

    /// Checks `πσ = id`, that `σ` is multiplicative, and that `ι(E)` is a
    /// square-zero ideal whose bimodule structure matches `e`.
    pub fn check(&self) -> Result<()> {
        let (b, c) = (&self.b, &self.c);
        let bad = |s: String| Err(Error::BimoduleInvalid(s));
        if self.sigma.len() + self.iota.len() != b.dim() {
            return bad("basis of B is not σ(C) ⊔ ι(E)".into());
        }
        let pi = self.pi();
        let push = |x: &Elem, map: &[usize]| -> Elem {
            let mut y: Elem = x.iter().map(|(k, s)| (map[*k], s.clone())).collect();
            y.sort_by_key(|(k, _)| *k);
            y
        };
        for i in 0..c.dim() {
            if pi[self.sigma[i]] != Some(i) {
                return bad("πσ is not the identity".into());
            }
            for j in 0..c.dim() {
                if *b.mul_basis(self.sigma[i], self.sigma[j])
                    != push(c.mul_basis(i, j), &self.sigma)
                {
                    return bad(format!(
                        "σ is not multiplicative on {} · {}",
                        c.basis_elem(i).label,
                        c.basis_elem(j).label
                    ));
                }
            }
        }
        for (x, &bx) in self.iota.iter().enumerate() {
            for &by in &self.iota {
                if !b.mul_basis(bx, by).is_empty() {
                    return bad("ι(E) does not square to zero".into());
                }
            }
            for k in 0..c.dim() {
                if *b.mul_basis(self.sigma[k], bx) != push(self.e.left(k, x), &self.iota)
                    || *b.mul_basis(bx, self.sigma[k]) != push(self.e.right(x, k), &self.iota)
                {
                    return bad("ι is not a bimodule map".into());
                }
            }
        }
        Ok(())
    }

    /// The same extension over the opposite algebras. Basis orders, and
    /// hence `σ` and `ι`, are unchanged.
    pub fn opposite(&self) -> ExtensionContext {
        let c = Arc::new(self.c.opposite());
        let b = Arc::new(self.b.opposite());
        let e = self.e.opposite(&c);
        ExtensionContext {
            name: format!("{}^op", self.name),
            c,
            b,
            e,
            sigma: self.sigma.clone(),
            iota: self.iota.clone(),
            ambient: self.ambient.as_ref().map(|a| Ambient {
                alg: Arc::new(a.alg.opposite()),
                to_b: a.to_b.clone(),
                from_b: a.from_b.clone(),
            }),
        }
    }
}

/// `C ⋉ E` with product `(c, x)(c', x') = (cc', cx' + xc')`.
pub fn trivial_extension(name: &str, e: Bimodule) -> Result<ExtensionContext> {
    e.check()?;
    let c = e.algebra().clone();
    let (n, d) = (c.dim(), e.dim());
    let mut basis: Vec<BasisElem> = c.basis().to_vec();
    basis.extend(e.basis().iter().map(|x: &BiBasis| BasisElem {
        source: x.source,
        target: x.target,
        label: x.label.clone(),
        path: None,
    }));
    let shift = |x: &Elem| -> Elem { x.iter().map(|(k, s)| (k + n, s.clone())).collect() };
    let mut table = vec![vec![Vec::new(); n + d]; n + d];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = c.mul_basis(i, j).clone();
        }
        for x in 0..d {
            table[i][n + x] = shift(e.left(i, x));
            table[n + x][i] = shift(e.right(x, i));
        }
    }
    let b = Algebra::from_parts(
        c.field(),
        c.vertices().to_vec(),
        basis,
        table,
        c.idempotents().to_vec(),
        None,
        Provenance::TrivialExtension,
        None,
    );
    b.check_axioms()?;
    let ctx = ExtensionContext {
        name: name.to_string(),
        c,
        b: Arc::new(b),
        e,
        sigma: (0..n).collect(),
        iota: (n..n + d).collect(),
        ambient: None,
    };
    Ok(ctx)
}

/// The relation extension of `c`.
pub fn relation_extension(name: &str, c: &Arc<Algebra>, seed: u64) -> Result<ExtensionContext> {
    trivial_extension(name, compute_e(c, seed)?)
}

/// The context `(C, B)` given by an admissible cut of a presentation of `B`:
/// `C` is the degree-zero part and `E` is spanned by the paths of positive
/// degree. `B` is rebuilt as `C ⋉ E` on this basis, and `E` is compared
/// with `Ext²_C(DC, C)`.
pub fn context_from_cut(
    bq: &BoundQuiver,
    cut: &Cut,
    cap: usize,
    seed: u64,
) -> Result<ExtensionContext> {
    let b = build_algebra(bq, cap)?;
    let cq = apply_cut(bq, cut, cap)?;
    let c = Arc::new(cq.algebra);
    let gen_of = |name: &str| -> Result<Elem> {
        b.generators()
            .iter()
            .find(|g| g.name == name)
            .map(|g| b.basis_elem_as_elem(g.index))
            .ok_or_else(|| Error::Input(format!("arrow {name} is not a generator of B")))
    };
    // σ evaluates each degree-zero path of C inside B
    let mut sigma: Vec<Elem> = Vec::with_capacity(c.dim());
    for e in c.basis() {
        let path = e.path.as_ref().expect("bound quiver basis");
        let mut x = b.basis_elem_as_elem(b.idempotent(e.source));
        for &a in path {
            x = b.mul(&x, &gen_of(&cq.quiver.quiver.arrows[a].name)?);
        }
        sigma.push(x);
    }
    let degree = |k: usize| {
        b.basis_elem(k).path.as_ref().map_or(0, |p| {
            p.iter()
                .filter(|&&a| cut.arrows.contains(&bq.quiver.arrows[a].name))
                .count()
        })
    };
    let iota: Vec<usize> = (0..b.dim()).filter(|&k| degree(k) > 0).collect();
    if b.dim() - iota.len() != c.dim() {
        return Err(Error::NonHomogeneousCut(format!(
            "degree-zero part of B has dimension {} but C has dimension {}",
            b.dim() - iota.len(),
            c.dim()
        )));
    }
    let to_e = |x: &Elem| -> Result<Elem> {
        x.iter()
            .map(|(k, s)| {
                iota.iter()
                    .position(|x| x == k)
                    .map(|p| (p, s.clone()))
                    .ok_or_else(|| {
                        Error::NonHomogeneousCut(
                            "positive-degree paths do not span an ideal".into(),
                        )
                    })
            })
            .collect()
    };
    for i in 0..c.dim() {
        for j in 0..c.dim() {
            let cij = c.mul_basis(i, j).iter().fold(Vec::new(), |acc, (k, s)| {
                crate::algebra::elem_add(&acc, &crate::algebra::elem_scale(&sigma[*k], s))
            });
            if b.mul(&sigma[i], &sigma[j]) != cij {
                return Err(Error::NonHomogeneousCut(format!(
                    "degree-zero paths {} and {} multiply differently in B",
                    c.basis_elem(i).label,
                    c.basis_elem(j).label
                )));
            }
        }
    }
    for &x in &iota {
        for &y in &iota {
            if !b.mul_basis(x, y).is_empty() {
                return Err(Error::NonHomogeneousCut(
                    "the positive-degree part does not square to zero".into(),
                ));
            }
        }
    }
    let ebasis = iota
        .iter()
        .map(|&k| {
            let f = b.basis_elem(k);
            BiBasis {
                source: f.source,
                target: f.target,
                label: f.label.clone(),
            }
        })
        .collect();
    let left = sigma
        .iter()
        .map(|s| {
            iota.iter()
                .map(|&k| to_e(&b.mul(s, &b.basis_elem_as_elem(k))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let right = iota
        .iter()
        .map(|&k| {
            sigma
                .iter()
                .map(|s| to_e(&b.mul(&b.basis_elem_as_elem(k), s)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let e = Bimodule::from_parts(c.clone(), ebasis, left, right);
    let mut ctx = trivial_extension(&cut.name, e)?;
    ctx.check()?;

    // basis change: degree-zero elements of B are solved against σ(C)
    let n = c.dim();
    let field = b.field();
    let s_mat = Mat::from_rows(field, b.dim(), sigma.iter().map(|x| b.dense(x)).collect());
    let mut to_b = vec![Vec::new(); b.dim()];
    for k in 0..b.dim() {
        to_b[k] = match iota.iter().position(|&x| x == k) {
            Some(p) => vec![(n + p, field.one())],
            None => {
                let row = Mat::from_rows(field, b.dim(), vec![b.dense(&b.basis_elem_as_elem(k))]);
                let x =
                    exactlin::solve_right(&s_mat, &row).expect("σ(C) spans the degree-zero part");
                crate::algebra::elem_from_row(x.row(0))
            }
        };
    }
    let mut from_b = sigma.clone();
    from_b.extend(iota.iter().map(|&k| b.basis_elem_as_elem(k)));
    ctx.ambient = Some(Ambient {
        alg: Arc::new(b),
        to_b,
        from_b,
    });
    let ext = compute_e(&c, seed)?;
    if ext.dim() != ctx.e.dim() {
        return Err(Error::HypothesisViolation(format!(
            "cut {}: positive-degree part has dimension {} but Ext²(DC, C) has dimension {}",
            cut.name,
            ctx.e.dim(),
            ext.dim()
        )));
    }
    let v = are_isomorphic(&ctx.e.right_module(), &ext.right_module(), seed);
    if !v.is_yes() {
        return Err(Error::HypothesisViolation(format!(
            "cut {}: positive-degree part is not isomorphic to Ext²(DC, C) ({})",
            cut.name,
            v.label()
        )));
    }
    Ok(ctx)
}
