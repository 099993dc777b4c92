//! JSON forms of modules and structure tables, and short module specs.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BasisElem, Provenance};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::modrep::{generator_matrices, injective, module_from_rep, projective, Module};

/// A representation: a dimension per vertex and a matrix per generator
/// (missing generators act as zero).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub arrows: BTreeMap<String, Vec<Vec<String>>>,
}

impl ModuleFile {
    pub fn from_module(m: &Module) -> Self {
        let alg = m.algebra();
        let dims = alg
            .vertices()
            .iter()
            .cloned()
            .zip(m.dims().iter().copied())
            .collect();
        let arrows = alg
            .generators()
            .iter()
            .zip(generator_matrices(m))
            .filter(|(_, mat)| !mat.is_zero())
            .map(|(g, mat)| (g.name.clone(), mat.to_strings()))
            .collect();
        ModuleFile { dims, arrows }
    }

    pub fn to_module(&self, alg: &Arc<Algebra>) -> Result<Module> {
        let field = alg.field();
        for v in self.dims.keys() {
            if alg.vertex_index(v).is_none() {
                return Err(Error::Input(format!("unknown vertex {v:?} in module file")));
            }
        }
        let dims: Vec<usize> = alg
            .vertices()
            .iter()
            .map(|v| self.dims.get(v).copied().unwrap_or(0))
            .collect();
        for name in self.arrows.keys() {
            if !alg.generators().iter().any(|g| &g.name == name) {
                return Err(Error::Input(format!(
                    "unknown arrow {name:?} in module file"
                )));
            }
        }
        let mats = alg
            .generators()
            .iter()
            .map(|g| {
                let e = alg.basis_elem(g.index);
                let (r, c) = (dims[e.source], dims[e.target]);
                match self.arrows.get(&g.name) {
                    None => Ok(Mat::zeros(field, r, c)),
                    Some(rows) => {
                        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                            return Err(Error::ShapeMismatch(format!(
                                "arrow {} needs a {r}×{c} matrix",
                                g.name
                            )));
                        }
                        let rows = rows
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .map(|s| field.parse(s))
                                    .collect::<Result<Vec<_>>>()
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(Mat::from_rows(field, c, rows))
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        module_from_rep(alg, dims, mats)
    }
}

/// Parses `S:v`, `P:v`, `I:v`, `radP:v`, `radI:v` (vertex labels) or a
/// module JSON document.
pub fn parse_module(alg: &Arc<Algebra>, spec: &str) -> Result<Module> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        return serde_json::from_str::<ModuleFile>(spec)?.to_module(alg);
    }
    if let Some((kind, v)) = spec.split_once(':') {
        let i = alg
            .vertex_index(v)
            .ok_or_else(|| Error::Input(format!("unknown vertex {v:?} in module spec {spec:?}")))?;
        return match kind {
            "S" => Ok(Module::simple(alg, i)),
            "P" => Ok(projective(alg, i)),
            "I" => Ok(injective(alg, i)),
            "radP" => Ok(projective(alg, i).radical().0),
            "radI" => Ok(injective(alg, i).radical().0),
            _ => Err(Error::Input(format!(
                "unknown module kind {kind:?}; use S, P, I, radP or radI"
            ))),
        };
    }
    Err(Error::Input(format!("cannot read module spec {spec:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Product {
    pub left: usize,
    pub right: usize,
    /// `(basis index, coefficient)` pairs.
    pub terms: Vec<(usize, String)>,
}

/// An algebra by structure constants; only nonzero products are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraTable {
    pub field: Field,
    pub vertices: Vec<String>,
    pub basis: Vec<BasisEntry>,
    pub idempotents: Vec<usize>,
    pub products: Vec<Product>,
}

impl AlgebraTable {
    pub fn from_algebra(a: &Algebra) -> Self {
        let v = a.vertices();
        let n = a.dim();
        let mut products = Vec::new();
        for l in 0..n {
            for r in 0..n {
                let p = a.mul_basis(l, r);
                if !p.is_empty() {
                    products.push(Product {
                        left: l,
                        right: r,
                        terms: p.iter().map(|(k, s)| (*k, s.to_string())).collect(),
                    });
                }
            }
        }
        AlgebraTable {
            field: a.field(),
            vertices: v.to_vec(),
            basis: a
                .basis()
                .iter()
                .map(|b| BasisEntry {
                    label: b.label.clone(),
                    source: v[b.source].clone(),
                    target: v[b.target].clone(),
                })
                .collect(),
            idempotents: a.idempotents().to_vec(),
            products,
        }
    }

    /// Rebuilds the algebra and checks its axioms.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let vertex = |s: &str| {
            self.vertices
                .iter()
                .position(|v| v == s)
                .ok_or_else(|| Error::Input(format!("unknown vertex {s:?} in structure table")))
        };
        let basis = self
            .basis
            .iter()
            .map(|b| {
                Ok(BasisElem {
                    source: vertex(&b.source)?,
                    target: vertex(&b.target)?,
                    label: b.label.clone(),
                    path: None,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let n = basis.len();
        if self.idempotents.len() != self.vertices.len() || self.idempotents.iter().any(|&e| e >= n)
        {
            return Err(Error::Input("one idempotent per vertex is required".into()));
        }
        let mut table = vec![vec![Vec::new(); n]; n];
        for p in &self.products {
            if p.left >= n || p.right >= n || p.terms.iter().any(|(k, _)| *k >= n) {
                return Err(Error::Input(format!(
                    "product ({}, {}) refers to a missing basis element",
                    p.left, p.right
                )));
            }
            let mut terms = p
                .terms
                .iter()
                .map(|(k, s)| Ok((*k, self.field.parse(s)?)))
                .collect::<Result<Vec<_>>>()?;
            terms.retain(|(_, s)| !s.is_zero());
            terms.sort_by_key(|(k, _)| *k);
            table[p.left][p.right] = terms;
        }
        let a = Algebra::from_parts(
            self.field,
            self.vertices.clone(),
            basis,
            table,
            self.idempotents.clone(),
            None,
            Provenance::TrivialExtension,
            None,
        );
        a.check_axioms()?;
        Ok(a)
    }
}
