use std::sync::Arc;

use proptest::prelude::*;

use ctalg::algebra::Algebra;
use ctalg::corpus;
use ctalg::exactlin::{self, Field, Mat};
use ctalg::homfun::*;
use ctalg::modrep::*;

fn mat(rows: usize, cols: usize, entries: &[i64]) -> Mat {
    let f = Field::Rational;
    let data = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| f.from_i64(entries[(r * cols + c) % entries.len().max(1)]))
                .collect()
        })
        .collect();
    Mat::from_rows(f, cols, data)
}

fn a3() -> Arc<Algebra> {
    corpus::algebra("a3").unwrap()
}

/// Representations `k^d1 → k^d2 → k^d3` of the linear `A₃` quiver.
fn a3_module() -> impl Strategy<Value = Module> {
    (
        0usize..3,
        0usize..3,
        0usize..3,
        prop::collection::vec(-2i64..=2, 1..10),
    )
        .prop_map(|(d1, d2, d3, e)| {
            let alpha = mat(d1, d2, &e);
            let beta = mat(d2, d3, &e[e.len() / 2..]);
            module_from_rep(&a3(), vec![d1, d2, d3], vec![alpha, beta]).unwrap()
        })
}

/// `⟨m, n⟩ = Σ m_i n_i − Σ_{arrows i→j} m_i n_j` for the linear `A₃` quiver.
fn euler_form(m: &[usize], n: &[usize]) -> i64 {
    let diag: usize = m.iter().zip(n).map(|(a, b)| a * b).sum();
    (diag as i64) - (m[0] * n[1] + m[1] * n[2]) as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_from_projective_is_vertex_space(m in a3_module()) {
        let alg = a3();
        for i in 0..3 {
            prop_assert_eq!(hom_dim(&projective(&alg, i), &m), m.dim_at(i));
            prop_assert_eq!(hom_dim(&m, &injective(&alg, i)), m.dim_at(i));
        }
    }

    #[test]
    fn euler_form_on_hereditary(m in a3_module(), n in a3_module()) {
        let h = hom_dim(&m, &n) as i64;
        let e = ext_dim(&m, &n, 1) as i64;
        prop_assert_eq!(h - e, euler_form(m.dims(), n.dims()));
        prop_assert_eq!(ext_dim(&m, &n, 2), 0);
    }

    #[test]
    fn ext_from_either_resolution(m in a3_module(), n in a3_module()) {
        prop_assert_eq!(ext_dim(&m, &n, 1), ext_dim_injective(&m, &n, 1));
    }

    #[test]
    fn auslander_reiten_formula(m in a3_module(), n in a3_module()) {
        // hereditary: Ext¹(M, N) ≅ D Hom(N, τM)
        prop_assert_eq!(ext_dim(&m, &n, 1), hom_dim(&n, &tau(&m)));
    }

    #[test]
    fn syzygy_sequences_add_up(m in a3_module()) {
        let cover = projective_cover(&m);
        prop_assert_eq!(syzygy(&m).dim() + m.dim(), cover.source.dim());
        let env = injective_envelope(&m);
        prop_assert_eq!(cosyzygy(&m).dim() + m.dim(), env.target.dim());
    }

    #[test]
    fn change_of_basis_is_isomorphic(m in a3_module(), shear in -3i64..=3) {
        let f = Field::Rational;
        // unitriangular base change at each vertex
        let s: Vec<Mat> = m.dims().iter().map(|&d| {
            let mut t = Mat::identity(f, d);
            for r in 0..d { for c in r + 1..d { t.set(r, c, f.from_i64(shear)); } }
            t
        }).collect();
        let inv: Vec<Mat> = s.iter().map(|t| exactlin::solve_right(t, &Mat::identity(f, t.rows())).unwrap()).collect();
        let alg = m.algebra().clone();
        let mats: Vec<Mat> = alg.generators().iter().zip(generator_matrices(&m)).map(|(g, a)| {
            let e = alg.basis_elem(g.index);
            inv[e.source].mul(&a).mul(&s[e.target])
        }).collect();
        let n = module_from_rep(&alg, m.dims().to_vec(), mats).unwrap();
        prop_assert!(are_isomorphic(&m, &n, 7).is_yes());
    }

    #[test]
    fn tau_agrees_with_dtr(m in a3_module()) {
        let op = Arc::new(a3().opposite());
        prop_assert!(are_isomorphic(&tau(&m), &d_tr(&m, &op), 3).is_yes());
        prop_assert!(are_isomorphic(&tau_inverse(&m).unwrap(), &tr_d(&m, &op), 3).is_yes());
    }

    #[test]
    fn top_and_radical_split_dimension(m in a3_module()) {
        prop_assert_eq!(m.top().0.dim() + m.radical().0.dim(), m.dim());
        prop_assert_eq!(m.loewy_layers().iter().flatten().sum::<usize>(), m.dim());
    }
}

#[test]
fn projectives_and_injectives_of_linear_a3() {
    let alg = a3();
    let dims: Vec<Vec<usize>> = (0..3)
        .map(|i| projective(&alg, i).dims().to_vec())
        .collect();
    assert_eq!(dims, vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
    let dims: Vec<Vec<usize>> = (0..3).map(|i| injective(&alg, i).dims().to_vec()).collect();
    assert_eq!(dims, vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]);
    assert!(is_projective(&projective(&alg, 0)) && is_injective(&projective(&alg, 0)));
    assert_eq!(projective(&alg, 0).loewy_string(), "1/2/3");
}

#[test]
fn tau_on_linear_a3() {
    // AR quiver of A₃: τ S(2) = S(3), τ S(1) = S(2), τ (1/2) = 2/3
    let alg = a3();
    let s = |i| Module::simple(&alg, i);
    assert!(are_isomorphic(&tau(&s(1)), &s(2), 1).is_yes());
    assert!(are_isomorphic(&tau(&s(0)), &s(1), 1).is_yes());
    let one_two = injective(&alg, 1);
    assert!(are_isomorphic(&tau(&one_two), &projective(&alg, 1), 1).is_yes());
    assert!(tau(&projective(&alg, 2)).is_zero());
}

#[test]
fn nakayama_sends_projectives_to_injectives() {
    let c = corpus::algebra("ex1_c").unwrap();
    for i in 0..c.num_vertices() {
        let p = projective(&c, i);
        assert!(are_isomorphic(&ctalg::present::nu_module(&p), &injective(&c, i), 1).is_yes());
        assert!(
            are_isomorphic(&ctalg::present::nu_inverse_module(&injective(&c, i)), &p, 1).is_yes()
        );
    }
}

#[test]
fn indecomposability() {
    let alg = a3();
    let p = projective(&alg, 0);
    assert!(is_indecomposable(&p, 1).unwrap().is_yes());
    let sum = p.direct_sum(&Module::simple(&alg, 1));
    assert!(!is_indecomposable(&sum, 1).unwrap().is_yes());
}

#[test]
fn small_prime_rejected_for_indecomposability() {
    let mut spec = corpus::quiver("a3").unwrap().to_spec();
    spec.field = Field::prime(2).unwrap();
    let bq = ctalg::algebra::BoundQuiver::from_spec(&spec).unwrap();
    let alg = Arc::new(ctalg::algebra::build_algebra(&bq, 8).unwrap());
    let r = is_indecomposable(&projective(&alg, 0), 1);
    assert!(matches!(r, Err(ctalg::Error::FieldTooSmall { .. })));
}

#[test]
fn relation_violation_detected() {
    let alg = corpus::algebra("a3_rel").unwrap();
    let one = mat(1, 1, &[1]);
    let r = module_from_rep(&alg, vec![1, 1, 1], vec![one.clone(), one]);
    assert!(matches!(r, Err(ctalg::Error::RelationViolated(_))));
}

#[test]
fn dimensions_over_relation_algebra() {
    let alg = corpus::algebra("a3_rel").unwrap();
    let s1 = Module::simple(&alg, 0);
    assert_eq!(projective_dimension(&s1, 4), Dimension::Exactly(2));
    assert_eq!(injective_dimension(&s1, 4), Dimension::Exactly(0));
    assert_eq!(ext_dim(&s1, &Module::simple(&alg, 2), 2), 1);
}
