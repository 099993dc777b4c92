//! Indecomposable projectives `P(i) = e_i A` and injectives `I(i) = D(A e_i)`.

use std::sync::Arc;

use super::module::Module;
use crate::algebra::Algebra;
use crate::exactlin::Mat;

/// `P(i)`: its part at vertex `j` has basis `alg.block(i, j)`.
pub fn projective(alg: &Arc<Algebra>, i: usize) -> Module {
    let field = alg.field();
    let n = alg.num_vertices();
    let blocks: Vec<Vec<usize>> = (0..n).map(|j| alg.block(i, j)).collect();
    let dims: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let act = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(a, e)| {
            let (s, t) = (e.source, e.target);
            let mut m = Mat::zeros(field, dims[s], dims[t]);
            for (r, &b) in blocks[s].iter().enumerate() {
                for (k, c) in alg.mul_basis(b, a) {
                    let col = blocks[t].iter().position(|&x| x == *k).expect("grading");
                    m.set(r, col, c.clone());
                }
            }
            m
        })
        .collect();
    Module::from_parts(alg.clone(), dims, act)
}

/// `I(i)`: its part at vertex `j` has the dual basis of `alg.block(j, i)`.
pub fn injective(alg: &Arc<Algebra>, i: usize) -> Module {
    let field = alg.field();
    let n = alg.num_vertices();
    let blocks: Vec<Vec<usize>> = (0..n).map(|j| alg.block(j, i)).collect();
    let dims: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let act = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(a, e)| {
            // (φ_x · a)(y) = φ_x(a·y)
            let (s, t) = (e.source, e.target);
            let mut m = Mat::zeros(field, dims[s], dims[t]);
            for (col, &y) in blocks[t].iter().enumerate() {
                for (k, c) in alg.mul_basis(a, y) {
                    let row = blocks[s].iter().position(|&x| x == *k).expect("grading");
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    Module::from_parts(alg.clone(), dims, act)
}

/// Position of the generator `e_i` inside `P(i) e_i`.
pub fn projective_top_index(alg: &Algebra, i: usize) -> usize {
    alg.block(i, i)
        .iter()
        .position(|&b| b == alg.idempotent(i))
        .unwrap()
}

/// Position of the socle functional `φ_{e_i}` inside `I(i) e_i`.
pub fn injective_socle_index(alg: &Algebra, i: usize) -> usize {
    projective_top_index(alg, i)
}

pub fn projective_sum(alg: &Arc<Algebra>, vertices: &[usize]) -> Module {
    let parts: Vec<Module> = vertices.iter().map(|&v| projective(alg, v)).collect();
    Module::direct_sum_all(alg, &parts)
}

pub fn injective_sum(alg: &Arc<Algebra>, vertices: &[usize]) -> Module {
    let parts: Vec<Module> = vertices.iter().map(|&v| injective(alg, v)).collect();
    Module::direct_sum_all(alg, &parts)
}

/// The regular module `A_A`.
pub fn regular(alg: &Arc<Algebra>) -> Module {
    let all: Vec<usize> = (0..alg.num_vertices()).collect();
    projective_sum(alg, &all)
}

/// The module `DA`.
pub fn dual_regular(alg: &Arc<Algebra>) -> Module {
    let all: Vec<usize> = (0..alg.num_vertices()).collect();
    injective_sum(alg, &all)
}
