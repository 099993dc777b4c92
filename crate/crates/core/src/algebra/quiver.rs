//! Quivers with relations, as read from and written to algebra JSON.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermSpec {
    pub coeff: String,
    pub path: Vec<String>,
}

/// Serialized form of a bound quiver.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverSpec {
    #[serde(default)]
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of paths; each path is a list of arrow indices in
/// composition order (`[a, b]` is "a then b").
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    pub fn source(&self, q: &Quiver) -> usize {
        q.arrows[self.terms[0].1[0]].source
    }
    pub fn target(&self, q: &Quiver) -> usize {
        q.arrows[*self.terms[0].1.last().unwrap()].target
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Whether the quiver has an oriented cycle (loops included).
    pub fn has_oriented_cycle(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen < n
    }
}

/// A validated quiver with relations over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl BoundQuiver {
    pub fn from_spec(spec: &QuiverSpec) -> Result<Self> {
        let field = spec.field;
        let mut seen = HashMap::new();
        for (i, v) in spec.vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::Input(format!("duplicate vertex {v:?}")));
            }
        }
        let mut arrows = Vec::new();
        for a in &spec.arrows {
            let lookup = |v: &str| {
                seen.get(v).copied().ok_or_else(|| {
                    Error::Input(format!("arrow {:?}: unknown vertex {v:?}", a.name))
                })
            };
            if arrows.iter().any(|b: &Arrow| b.name == a.name) {
                return Err(Error::Input(format!("duplicate arrow name {:?}", a.name)));
            }
            arrows.push(Arrow {
                name: a.name.clone(),
                source: lookup(&a.from)?,
                target: lookup(&a.to)?,
            });
        }
        let quiver = Quiver {
            vertices: spec.vertices.clone(),
            arrows,
        };
        let mut relations = Vec::new();
        for (ri, rel) in spec.relations.iter().enumerate() {
            if rel.is_empty() {
                return Err(Error::Input(format!("relation {ri} is empty")));
            }
            let mut terms = Vec::new();
            let mut ends = None;
            for t in rel {
                let coeff = field
                    .parse(&t.coeff)
                    .map_err(|e| Error::Input(format!("relation {ri}: {e}")))?;
                if t.path.len() < 2 {
                    return Err(Error::NonAdmissible(format!(
                        "relation {ri} has a term of length {} (< 2)",
                        t.path.len()
                    )));
                }
                let path = t
                    .path
                    .iter()
                    .map(|n| {
                        quiver.arrow_index(n).ok_or_else(|| {
                            Error::Input(format!("relation {ri}: unknown arrow {n:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                for w in path.windows(2) {
                    if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                        return Err(Error::InconsistentPath(format!(
                            "relation {ri}: {} does not compose with {}",
                            quiver.arrows[w[0]].name, quiver.arrows[w[1]].name
                        )));
                    }
                }
                let st = (
                    quiver.arrows[path[0]].source,
                    quiver.arrows[*path.last().unwrap()].target,
                );
                match ends {
                    None => ends = Some(st),
                    Some(e) if e != st => {
                        return Err(Error::InconsistentPath(format!(
                            "relation {ri}: terms have different endpoints"
                        )))
                    }
                    _ => {}
                }
                if !coeff.is_zero() {
                    terms.push((coeff, path));
                }
            }
            if !terms.is_empty() {
                relations.push(Relation { terms });
            }
        }
        Ok(BoundQuiver {
            field,
            quiver,
            relations,
        })
    }

    pub fn to_spec(&self) -> QuiverSpec {
        let q = &self.quiver;
        QuiverSpec {
            field: self.field,
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowSpec {
                    name: a.name.clone(),
                    from: q.vertices[a.source].clone(),
                    to: q.vertices[a.target].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, p)| TermSpec {
                            coeff: c.to_string(),
                            path: p.iter().map(|&a| q.arrows[a].name.clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: QuiverSpec = serde_json::from_str(text)?;
        Self::from_spec(&spec)
    }
}
