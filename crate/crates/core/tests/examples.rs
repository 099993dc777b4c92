//! The worked examples of the relation-extension construction.

use std::collections::BTreeMap;

use ctalg::corpus;
use ctalg::homfun::tau;
use ctalg::modrep::*;
use ctalg::present::*;
use ctalg::relext::*;

fn arrows(pairs: &[(&str, &str)]) -> BTreeMap<(String, String), usize> {
    pairs
        .iter()
        .map(|(a, b)| ((a.to_string(), b.to_string()), 1))
        .collect()
}

fn mult(nv: usize, vs: &[usize]) -> Vec<usize> {
    vertices_to_multiplicities(nv, vs)
}

fn ex3_family() -> Vec<ExtensionContext> {
    let bq = corpus::quiver("ex3_b").unwrap();
    corpus::ex3_cuts()
        .iter()
        .map(|cut| context_from_cut(&bq, cut, ctalg::algebra::DEFAULT_PATH_CAP, 1).unwrap())
        .collect()
}

/// `1/(2 3)` over the ambient algebra: `P(1)` modulo its second radical.
fn one_over_two_three(ctx: &ExtensionContext) -> Module {
    let p = projective(ctx.ambient_algebra(), 0);
    let rad2 = p.radical_of(&p.radical_rows());
    p.quotient(&rad2).0
}

#[test]
fn example_one_quiver_of_b() {
    let c = corpus::algebra("ex1_c").unwrap();
    assert_eq!(c.dim(), 11);
    let ctx = relation_extension("ex1", &c, 1).unwrap();
    assert_eq!(ctx.e.dim(), 2);
    assert_eq!(ctx.b.dim(), 13);
    assert_eq!(
        ctx.b.gabriel_quiver(),
        arrows(&[("1", "3"), ("3", "2"), ("3", "4"), ("4", "5"), ("5", "3")])
    );
}

#[test]
fn example_one_presentation() {
    let c = corpus::algebra("ex1_c").unwrap();
    let ctx = relation_extension("ex1", &c, 1).unwrap();
    let m = injective(&c, 1).radical().0;
    assert_eq!(m.loewy_string(), "3/2");
    assert!(are_isomorphic(&tau(&syzygy(&m)), &Module::simple(&c, 4), 1).is_yes());

    let p = present(&m, &ctx, 1).unwrap();
    assert_eq!(p.terms.left, mult(5, &[1]));
    assert_eq!(p.terms.right, mult(5, &[0, 4]));
    assert!(p.oracle.accepted);
    assert_eq!(p.oracle.k, vec![0; 5]);
    assert_eq!(p.oracle.l, vec![0; 5]);
    assert!(p.certificate.as_ref().unwrap().is_exact());
}

#[test]
fn example_two_resolution_of_projective() {
    let c = corpus::algebra("ex2_c").unwrap();
    let ctx = relation_extension("ex2", &c, 1).unwrap();
    let p2 = projective(&c, 1);
    assert_eq!(ctx.tensor_e(&p2, 1).unwrap().dims(), &[1, 1, 0, 1, 1]);
    let (tilde, m) = tilde_injective(&p2, 1).unwrap();
    assert_eq!(m, mult(5, &[1]));
    assert!(are_isomorphic(&tilde, &injective(&c, 1), 1).is_yes());

    let pres = projective_injective_resolution(&p2, &ctx, 1).unwrap();
    assert_eq!(pres.induced.dim(), 6);
    assert!(are_isomorphic(&pres.induced, &projective(&ctx.b, 1), 1).is_yes());
    assert_eq!(pres.terms.left, mult(5, &[4, 4]));
    assert_eq!(pres.terms.right, mult(5, &[1]));
    let cert = pres.certificate.unwrap();
    assert!(cert.is_resolution());
    assert_eq!(cert.ranks.rank_f, 6);
    assert_eq!(cert.ranks.dim_coker_g, 0);
}

#[test]
fn example_two_new_arrows() {
    let c = corpus::algebra("ex2_c").unwrap();
    let ctx = relation_extension("ex2", &c, 1).unwrap();
    let q = ctx.b.gabriel_quiver();
    for a in [("2", "4"), ("3", "4")] {
        assert_eq!(
            q.get(&(a.0.to_string(), a.1.to_string())),
            Some(&1),
            "missing {a:?}"
        );
    }
    assert_eq!(q.get(&("4".to_string(), "1".to_string())), Some(&2));
}

#[test]
fn example_two_finite_trace() {
    let c = corpus::algebra("ex2_c").unwrap();
    let ctx = relation_extension("ex2", &c, 1).unwrap();
    let tr = iterate_resolution(&projective(&ctx.b, 1), std::slice::from_ref(&ctx), 6, 1).unwrap();
    assert_eq!(tr.stop, StopReason::Finite);
    assert_eq!(tr.terms().len(), 2);
}

#[test]
fn example_three_detection() {
    let fam = ex3_family();
    let (c1, c2, c3) = (&fam[0], &fam[1], &fam[2]);
    let s1 = Module::simple(c2.ambient_algebra(), 0);
    assert!(c2.detect_induced(&c2.from_ambient(&s1), 1).is_ok());

    let x = one_over_two_three(c1);
    assert_eq!(x.loewy_string(), "1/(2 3)");
    assert!(c1.detect_induced(&c1.from_ambient(&x), 1).is_ok());
    assert!(c2.detect_induced(&c2.from_ambient(&x), 1).is_err());
    assert!(c3.detect_induced(&c3.from_ambient(&x), 1).is_err());
}

#[test]
fn example_three_periodic_trace() {
    let fam = ex3_family();
    let s1 = Module::simple(fam[0].ambient_algebra(), 0);
    let tr = iterate_resolution(&s1, &fam, 10, 1).unwrap();
    assert_eq!(tr.stop, StopReason::Periodic);
    assert_eq!(tr.period, Some(6));
    assert_eq!(tr.modules(), vec!["1", "1/(2 3)", "4"]);
    let terms: Vec<Vec<usize>> = tr.terms().iter().map(|t| t.to_vec()).collect();
    assert_eq!(
        terms,
        vec![
            mult(4, &[0]),
            mult(4, &[3]),
            mult(4, &[1, 2]),
            mult(4, &[0]),
            mult(4, &[3]),
            mult(4, &[1, 2])
        ]
    );
}

#[test]
fn example_three_cut_dimensions() {
    let fam = ex3_family();
    let dims: Vec<(usize, usize, usize)> = fam
        .iter()
        .map(|c| (c.c.dim(), c.e.dim(), c.b.dim()))
        .collect();
    assert_eq!(dims, vec![(9, 1, 10), (7, 3, 10), (7, 3, 10)]);
}

#[test]
fn example_three_injective_four_over_second_cut() {
    let fam = ex3_family();
    let c2 = &fam[1];
    let four = Module::simple(&c2.c, 3);
    assert!(is_injective(&four));
    let h = c2.cohom_e(&four, 1).unwrap();
    assert_eq!(h.loewy_string(), "1/(2 3)");
    let t = theorem_terms(&four, c2, 1).unwrap();
    // injective with pd 2: the pd-two shape applies and gives the same terms
    assert_eq!((t.clause, t.id, t.pd), (Clause::PdTwo, 0, 2));
    assert_eq!(t.left, mult(4, &[3]));
    assert_eq!(t.right, mult(4, &[1, 2]));
    assert_eq!(t.hat, mult(4, &[1, 2]));
}
