use std::sync::Arc;

use ctalg::algebra::{build_algebra, BoundQuiver};
use ctalg::corpus;
use ctalg::modrep::*;
use ctalg::relext::*;
use ctalg::Error;

fn ctx(name: &str) -> ExtensionContext {
    relation_extension(name, &corpus::algebra(name).unwrap(), 1).unwrap()
}

fn all_contexts() -> Vec<ExtensionContext> {
    ctalg::selftest::corpus_contexts(1).unwrap()
}

#[test]
fn dimension_of_e() {
    for (name, e) in [
        ("a2", 0),
        ("a3", 0),
        ("a3_rel", 1),
        ("ex1_c", 2),
        ("ex2_c", 7),
    ] {
        let x = ctx(name);
        assert_eq!(x.e.dim(), e, "{name}");
        assert_eq!(x.b.dim(), x.c.dim() + e);
    }
}

#[test]
fn hereditary_extension_is_trivial() {
    for name in ["a2", "a3"] {
        let x = ctx(name);
        assert!(x.b.same_tables(&x.c));
        let m = Module::simple(&x.c, 0);
        assert!(x.tensor_e(&m, 1).unwrap().is_zero());
        assert!(x.cohom_e(&m, 1).unwrap().is_zero());
    }
}

#[test]
fn relation_closes_the_cycle() {
    let x = ctx("a3_rel");
    let q = x.b.gabriel_quiver();
    assert_eq!(q.len(), 3);
    assert_eq!(q.get(&("3".to_string(), "1".to_string())), Some(&1));
    assert_eq!(x.b.dim(), 6);
}

#[test]
fn contexts_satisfy_axioms() {
    for x in all_contexts() {
        x.check().unwrap();
        x.e.check().unwrap();
        let op = x.opposite();
        op.check().unwrap();
        assert_eq!((op.c.dim(), op.e.dim()), (x.c.dim(), x.e.dim()));
    }
}

#[test]
fn induction_and_coinduction_of_projectives_and_injectives() {
    for x in all_contexts() {
        for i in 0..x.c.num_vertices() {
            let p = x.induce(&projective(&x.c, i));
            assert!(
                are_isomorphic(&p, &projective(&x.b, i), 1).is_yes(),
                "{} P({i})",
                x.name
            );
            let q = x.coinduce(&injective(&x.c, i)).unwrap();
            assert!(
                are_isomorphic(&q, &injective(&x.b, i), 1).is_yes(),
                "{} I({i})",
                x.name
            );
        }
    }
}

#[test]
fn tensor_of_projectives_recovers_e() {
    for x in all_contexts() {
        let parts: Vec<Module> = (0..x.c.num_vertices())
            .map(|i| x.tensor_e_raw(&projective(&x.c, i)))
            .collect();
        let sum = Module::direct_sum_all(&x.c, &parts);
        assert!(
            are_isomorphic(&sum, &x.e.right_module(), 1).is_yes(),
            "{}",
            x.name
        );
    }
}

#[test]
fn restriction_undoes_inflation() {
    for x in all_contexts() {
        for i in 0..x.c.num_vertices() {
            let m = injective(&x.c, i);
            assert!(are_isomorphic(&x.restrict(&x.inflate(&m)), &m, 1).is_yes());
        }
    }
}

#[test]
fn projective_b_modules_are_induced() {
    for x in all_contexts() {
        for i in 0..x.c.num_vertices() {
            let (n, f) = x.detect_induced(&projective(&x.b, i), 1).unwrap();
            assert!(f.is_iso());
            assert!(are_isomorphic(&n, &projective(&x.c, i), 1).is_yes());
        }
    }
}

#[test]
fn ambient_transport_round_trip() {
    let bq = corpus::quiver("ex3_b").unwrap();
    for cut in corpus::ex3_cuts() {
        let x = context_from_cut(&bq, &cut, ctalg::algebra::DEFAULT_PATH_CAP, 1).unwrap();
        for i in 0..4 {
            let p = projective(x.ambient_algebra(), i);
            let there = x.from_ambient(&p);
            there.validate().unwrap();
            assert!(are_isomorphic(&there, &projective(&x.b, i), 1).is_yes());
            assert!(are_isomorphic(&x.to_ambient(&there), &p, 1).is_yes());
        }
    }
}

#[test]
fn cut_e_matches_computed_e() {
    let bq = corpus::quiver("ex3_b").unwrap();
    for cut in corpus::ex3_cuts() {
        let x = context_from_cut(&bq, &cut, ctalg::algebra::DEFAULT_PATH_CAP, 1).unwrap();
        let e = compute_e(&x.c, 1).unwrap();
        assert_eq!(e.dim(), x.e.dim());
        assert!(are_isomorphic(&e.right_module(), &x.e.right_module(), 1).is_yes());
        assert!(are_isomorphic(&e.dual_left_module(), &x.e.dual_left_module(), 1).is_yes());
    }
}

#[test]
fn global_dimension_three_rejected() {
    // linear A₄ with every length-two path zero has global dimension 3
    let bq = BoundQuiver::from_json(
        r#"{"vertices": ["1", "2", "3", "4"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "2", "to": "3"}, {"name": "c", "from": "3", "to": "4"}],
            "relations": [[{"coeff": "1", "path": ["a", "b"]}], [{"coeff": "1", "path": ["b", "c"]}]]}"#,
    )
    .unwrap();
    let c = Arc::new(build_algebra(&bq, 8).unwrap());
    let err = relation_extension("a4", &c, 1).unwrap_err();
    assert!(matches!(err, Error::GlobalDimensionTooHigh { .. }));
    assert_eq!(err.exit_code(), 3);
}
