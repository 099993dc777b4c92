//! Path-algebra quotients `kQ/I` as structure-constant algebras.
//!
//! Paths are enumerated by length. For a truncation length `N` the ideal is
//! represented by all shifts `p·r·q` of the relations, truncated modulo
//! paths of length `> N`; `N` is accepted once every path of length `N`
//! lies in that span. The basis is then the set of standard paths: the
//! complement of the ideal's pivots when paths are ordered by decreasing
//! (length, arrow names), so the longest/largest paths get eliminated first.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::quiver::BoundQuiver;
use super::{Algebra, BasisElem, Elem, Generator, Provenance};
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat, Scalar};

pub const DEFAULT_PATH_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

struct Enumerator<'a> {
    bq: &'a BoundQuiver,
    by_len: Vec<Vec<Path>>,
}

impl<'a> Enumerator<'a> {
    fn new(bq: &'a BoundQuiver) -> Self {
        let trivial = (0..bq.quiver.vertices.len())
            .map(|v| Path {
                source: v,
                target: v,
                arrows: Vec::new(),
            })
            .collect();
        Enumerator {
            bq,
            by_len: vec![trivial],
        }
    }

    fn ensure(&mut self, len: usize) {
        while self.by_len.len() <= len {
            let last = self.by_len.last().unwrap();
            let mut next = Vec::new();
            for p in last {
                for (ai, a) in self.bq.quiver.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            self.by_len.push(next);
        }
    }
}

fn names<'a>(bq: &'a BoundQuiver, p: &Path) -> Vec<&'a str> {
    p.arrows
        .iter()
        .map(|&a| bq.quiver.arrows[a].name.as_str())
        .collect()
}

/// Canonical order: by length, then lexicographically by arrow names;
/// trivial paths by vertex order.
fn path_cmp(bq: &BoundQuiver, a: &Path, b: &Path) -> Ordering {
    a.arrows
        .len()
        .cmp(&b.arrows.len())
        .then_with(|| names(bq, a).cmp(&names(bq, b)))
        .then_with(|| a.source.cmp(&b.source))
}

fn label(bq: &BoundQuiver, p: &Path) -> String {
    if p.arrows.is_empty() {
        format!("e{}", bq.quiver.vertices[p.source])
    } else {
        names(bq, p).join(".")
    }
}

/// Builds `kQ/I`; fails with `NonAdmissible` if no truncation length up to
/// `cap` contains all long paths in the ideal.
pub fn build_algebra(bq: &BoundQuiver, cap: usize) -> Result<Algebra> {
    let field = bq.field;
    let mut en = Enumerator::new(bq);
    let min_len: Vec<usize> = bq
        .relations
        .iter()
        .map(|r| r.terms.iter().map(|(_, p)| p.len()).min().unwrap())
        .collect();

    let mut chosen = None;
    for n in 1..=cap {
        en.ensure(n);
        let paths: Vec<&Path> = en.by_len[..=n].iter().flatten().collect();
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (ri, rel) in bq.relations.iter().enumerate() {
            let (rs, rt) = (rel.source(&bq.quiver), rel.target(&bq.quiver));
            if min_len[ri] > n {
                continue;
            }
            let budget = n - min_len[ri];
            for lp in 0..=budget {
                for p in en.by_len[lp].iter().filter(|p| p.target == rs) {
                    for lq in 0..=(budget - lp) {
                        for q in en.by_len[lq].iter().filter(|q| q.source == rt) {
                            let mut row = vec![field.zero(); paths.len()];
                            let mut nonzero = false;
                            for (c, t) in &rel.terms {
                                let len = lp + t.len() + lq;
                                if len > n {
                                    continue;
                                }
                                let mut arrows = p.arrows.clone();
                                arrows.extend(t);
                                arrows.extend(&q.arrows);
                                let key = Path {
                                    source: p.source,
                                    target: q.target,
                                    arrows,
                                };
                                let k = index[&key];
                                row[k] = &row[k] + c;
                                nonzero = true;
                            }
                            if nonzero {
                                rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        let ideal = Mat::from_rows(field, paths.len(), rows);
        let r0 = exactlin::rank(&ideal);
        let mut longest = Mat::zeros(field, en.by_len[n].len(), paths.len());
        for (i, p) in en.by_len[n].iter().enumerate() {
            longest.set(i, index[p], field.one());
        }
        if exactlin::rank(&ideal.vstack(&longest)) == r0 {
            // keep only coordinates of length < n
            let short: Vec<usize> = (0..paths.len())
                .filter(|&i| paths[i].arrows.len() < n)
                .collect();
            chosen = Some((n, vec![ideal.select_cols(&short)]));
            break;
        }
    }
    let Some((n, truncated)) = chosen else {
        return Err(Error::NonAdmissible(format!(
            "paths do not vanish modulo the relations up to length {cap}"
        )));
    };

    // all paths of length < n, largest first
    let mut paths: Vec<Path> = en.by_len[..n].iter().flatten().cloned().collect();
    let canonical = paths.clone();
    paths.sort_by(|a, b| path_cmp(bq, b, a));
    let pos_in_sorted: HashMap<&Path, usize> =
        paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let ideal = match truncated.into_iter().next() {
        Some(m) => {
            // columns of m follow `canonical` order; permute into sorted order
            let mut out = Mat::zeros(field, m.rows(), paths.len());
            for (ci, p) in canonical.iter().enumerate() {
                let cs = pos_in_sorted[p];
                for r in 0..m.rows() {
                    out.set(r, cs, m.get(r, ci).clone());
                }
            }
            out
        }
        None => Mat::zeros(field, 0, paths.len()),
    };
    let quotient = exactlin::image_quotient(&ideal, paths.len());

    let mut basis_paths: Vec<(usize, &Path)> = quotient
        .complement
        .iter()
        .enumerate()
        .map(|(t, &c)| (t, &paths[c]))
        .collect();
    basis_paths.sort_by(|a, b| path_cmp(bq, a.1, b.1));
    let mut coord_to_basis = vec![0; basis_paths.len()];
    for (bi, (t, _)) in basis_paths.iter().enumerate() {
        coord_to_basis[*t] = bi;
    }
    let reduce = |p: &Path| -> Elem {
        if p.arrows.len() >= n {
            return Vec::new();
        }
        let row = pos_in_sorted[p];
        let mut out: Elem = (0..quotient.dim())
            .filter_map(|t| {
                let x = quotient.projection.get(row, t);
                (!x.is_zero()).then(|| (coord_to_basis[t], x.clone()))
            })
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    };

    let basis: Vec<BasisElem> = basis_paths
        .iter()
        .map(|(_, p)| BasisElem {
            source: p.source,
            target: p.target,
            label: label(bq, p),
            path: Some(p.arrows.clone()),
        })
        .collect();
    let dim = basis.len();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let (pa, pb) = (basis_paths[a].1, basis_paths[b].1);
            if pa.target != pb.source {
                continue;
            }
            let mut arrows = pa.arrows.clone();
            arrows.extend(&pb.arrows);
            table[a][b] = reduce(&Path {
                source: pa.source,
                target: pb.target,
                arrows,
            });
        }
    }
    let find = |arrows: &[usize], v: usize| {
        basis_paths
            .iter()
            .position(|(_, p)| p.arrows == arrows && p.source == v)
    };
    let idempotents: Vec<usize> = (0..bq.quiver.vertices.len())
        .map(|v| find(&[], v).expect("trivial paths survive"))
        .collect();
    let generators = bq
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            find(&[ai], a.source)
                .map(|index| Generator {
                    name: a.name.clone(),
                    index,
                })
                .ok_or_else(|| Error::NonAdmissible(format!("arrow {} lies in the ideal", a.name)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Algebra::from_parts(
        field,
        bq.quiver.vertices.clone(),
        basis,
        table,
        idempotents,
        Some(generators),
        Provenance::BoundQuiver,
        Some(bq.clone()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverSpec;

    fn spec(json: &str) -> BoundQuiver {
        let s: QuiverSpec = serde_json::from_str(json).unwrap();
        BoundQuiver::from_spec(&s).unwrap()
    }

    #[test]
    fn a2_has_dimension_three() {
        let a = build_algebra(
            &spec(r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]}"#),
            30,
        )
        .unwrap();
        assert_eq!(a.dim(), 3);
        a.check_axioms().unwrap();
    }

    #[test]
    fn loop_without_relations_is_not_admissible() {
        let bq = spec(r#"{"vertices":["1"],"arrows":[{"name":"x","from":"1","to":"1"}]}"#);
        assert!(matches!(
            build_algebra(&bq, 8),
            Err(Error::NonAdmissible(_))
        ));
    }

    #[test]
    fn nilpotent_loop() {
        let bq = spec(
            r#"{"vertices":["1"],"arrows":[{"name":"x","from":"1","to":"1"}],
                "relations":[[{"coeff":"1","path":["x","x","x"]}]]}"#,
        );
        let a = build_algebra(&bq, 30).unwrap();
        assert_eq!(a.dim(), 3);
        a.check_axioms().unwrap();
    }

    #[test]
    fn short_relation_rejected() {
        let s: QuiverSpec = serde_json::from_str(
            r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
                "relations":[[{"coeff":"1","path":["a"]}]]}"#,
        )
        .unwrap();
        assert!(matches!(
            BoundQuiver::from_spec(&s),
            Err(Error::NonAdmissible(_))
        ));
    }

    #[test]
    fn non_composable_relation_rejected() {
        let s: QuiverSpec = serde_json::from_str(
            r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
                "relations":[[{"coeff":"1","path":["a","a"]}]]}"#,
        )
        .unwrap();
        assert!(matches!(
            BoundQuiver::from_spec(&s),
            Err(Error::InconsistentPath(_))
        ));
    }
}
