//! Building modules from quiver representations (one matrix per arrow).

use std::sync::Arc;

use super::module::Module;
use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat};

/// Completes an action given on the degree-one generators to all basis
/// elements, then validates it. `mats[k]` is the matrix of generator `k`.
pub fn module_from_rep(alg: &Arc<Algebra>, dims: Vec<usize>, mats: Vec<Mat>) -> Result<Module> {
    let field = alg.field();
    let gens = alg.generators();
    if dims.len() != alg.num_vertices() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} vertex dimensions, got {}",
            alg.num_vertices(),
            dims.len()
        )));
    }
    if mats.len() != gens.len() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} arrow matrices, got {}",
            gens.len(),
            mats.len()
        )));
    }
    for (g, m) in gens.iter().zip(&mats) {
        let e = alg.basis_elem(g.index);
        if m.rows() != dims[e.source] || m.cols() != dims[e.target] {
            return Err(Error::ShapeMismatch(format!(
                "arrow {} needs a {}×{} matrix, got {}×{}",
                g.name,
                dims[e.source],
                dims[e.target],
                m.rows(),
                m.cols()
            )));
        }
    }
    if let Some(bq) = alg.presentation() {
        check_relations(alg, bq, &dims, &mats)?;
    }

    // Words in the generators, as (element, matrix), until they span A.
    let n = alg.dim();
    let mut words: Vec<(Elem, Mat)> = Vec::new();
    let mut span = Mat::zeros(field, 0, n);
    let push = |words: &mut Vec<(Elem, Mat)>, span: &mut Mat, x: Elem, m: Mat| -> bool {
        let row = Mat::from_rows(field, n, vec![alg.dense(&x)]);
        let grown = span.vstack(&row);
        if exactlin::rank(&grown) > span.rows() {
            *span = exactlin::row_basis(&grown);
            words.push((x, m));
            true
        } else {
            false
        }
    };
    for (i, &e) in alg.idempotents().iter().enumerate() {
        push(
            &mut words,
            &mut span,
            alg.basis_elem_as_elem(e),
            Mat::identity(field, dims[i]),
        );
    }
    let mut frontier: Vec<usize> = Vec::new();
    for (g, m) in gens.iter().zip(&mats) {
        if push(
            &mut words,
            &mut span,
            alg.basis_elem_as_elem(g.index),
            m.clone(),
        ) {
            frontier.push(words.len() - 1);
        }
    }
    while !frontier.is_empty() && span.rows() < n {
        let mut next = Vec::new();
        for &w in &frontier {
            for (g, m) in gens.iter().zip(&mats) {
                let (x, mx) = words[w].clone();
                let prod = alg.mul(&x, &alg.basis_elem_as_elem(g.index));
                if prod.is_empty() {
                    continue;
                }
                if push(&mut words, &mut span, prod, mx.mul(m)) {
                    next.push(words.len() - 1);
                }
            }
        }
        frontier = next;
    }
    if span.rows() < n {
        return Err(Error::Input(
            "the arrows do not generate the algebra".into(),
        ));
    }
    // Express each basis element in the words.
    let wmat = Mat::from_rows(field, n, words.iter().map(|(x, _)| alg.dense(x)).collect());
    let coeffs = exactlin::solve_right(&wmat, &Mat::identity(field, n)).expect("words span A");
    let act = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(b, e)| {
            let mut out = Mat::zeros(field, dims[e.source], dims[e.target]);
            for (k, (x, mx)) in words.iter().enumerate() {
                let c = coeffs.get(b, k);
                if c.is_zero() {
                    continue;
                }
                // words are homogeneous, so only those in the same block contribute
                let be = alg.basis_elem(x[0].0);
                if be.source == e.source && be.target == e.target {
                    out.axpy(c, mx);
                }
            }
            out
        })
        .collect();
    let m = Module::from_parts(alg.clone(), dims, act);
    m.validate()?;
    Ok(m)
}

fn check_relations(
    alg: &Algebra,
    bq: &crate::algebra::BoundQuiver,
    dims: &[usize],
    mats: &[Mat],
) -> Result<()> {
    let field = alg.field();
    let gen_of_arrow: Vec<usize> = bq
        .quiver
        .arrows
        .iter()
        .map(|a| {
            alg.generators()
                .iter()
                .position(|g| g.name == a.name)
                .unwrap()
        })
        .collect();
    for rel in &bq.relations {
        let (s, t) = (rel.source(&bq.quiver), rel.target(&bq.quiver));
        let mut total = Mat::zeros(field, dims[s], dims[t]);
        for (c, path) in &rel.terms {
            let mut m = Mat::identity(field, dims[s]);
            for &a in path {
                m = m.mul(&mats[gen_of_arrow[a]]);
            }
            total.axpy(c, &m);
        }
        if !total.is_zero() {
            let shown: Vec<String> = rel
                .terms
                .iter()
                .map(|(c, p)| {
                    let names: Vec<&str> = p
                        .iter()
                        .map(|&a| bq.quiver.arrows[a].name.as_str())
                        .collect();
                    format!("{c}·{}", names.join(""))
                })
                .collect();
            return Err(Error::RelationViolated(format!(
                "relation {} does not hold",
                shown.join(" + ")
            )));
        }
    }
    Ok(())
}

/// Matrices of the generators, in generator order.
pub fn generator_matrices(m: &Module) -> Vec<Mat> {
    m.algebra()
        .generators()
        .iter()
        .map(|g| m.action(g.index).clone())
        .collect()
}
