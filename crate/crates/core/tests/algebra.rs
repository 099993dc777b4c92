use ctalg::algebra::*;
use ctalg::corpus;
use ctalg::modrep::{global_dimension, Dimension};
use ctalg::Error;

#[test]
fn corpus_dimensions() {
    // number of nonzero paths, counted by hand from each quiver
    for (name, dim) in [
        ("a2", 3),
        ("a3", 6),
        ("a3_rel", 5),
        ("ex1_c", 11),
        ("ex2_c", 14),
        ("ex3_b", 10),
    ] {
        assert_eq!(corpus::algebra(name).unwrap().dim(), dim, "{name}");
    }
}

#[test]
fn corpus_axioms_hold() {
    for (name, _) in corpus::QUIVERS {
        corpus::algebra(name).unwrap().check_axioms().unwrap();
    }
}

#[test]
fn global_dimensions() {
    for (name, gl) in [
        ("a2", 1),
        ("a3", 1),
        ("a3_rel", 2),
        ("ex1_c", 2),
        ("ex2_c", 2),
    ] {
        assert_eq!(
            global_dimension(&corpus::algebra(name).unwrap(), 4),
            Dimension::Exactly(gl),
            "{name}"
        );
    }
    // a cluster-tilted algebra with an oriented cycle has infinite global dimension
    assert!(!global_dimension(&corpus::algebra("ex3_b").unwrap(), 4).at_most(4));
}

#[test]
fn gabriel_quiver_recovers_arrows() {
    let bq = corpus::quiver("ex1_c").unwrap();
    let a = build_algebra(&bq, DEFAULT_PATH_CAP).unwrap();
    let q = a.gabriel_quiver();
    assert_eq!(q.values().sum::<usize>(), bq.quiver.arrows.len());
    for arrow in &bq.quiver.arrows {
        let key = (
            bq.quiver.vertices[arrow.source].clone(),
            bq.quiver.vertices[arrow.target].clone(),
        );
        assert!(q.contains_key(&key));
    }
}

#[test]
fn opposite_is_an_involution() {
    let a = corpus::algebra("ex2_c").unwrap();
    let op = a.opposite();
    op.check_axioms().unwrap();
    assert!(op.opposite().same_tables(&a));
    assert_eq!(op.dim(), a.dim());
}

#[test]
fn spec_round_trip() {
    for (name, _) in corpus::QUIVERS {
        let bq = corpus::quiver(name).unwrap();
        let again = BoundQuiver::from_spec(&bq.to_spec()).unwrap();
        assert_eq!(again, bq);
    }
}

#[test]
fn prime_field_build_matches_rational_dimension() {
    let mut spec = corpus::quiver("ex1_c").unwrap().to_spec();
    spec.field = ctalg::exactlin::Field::prime(101).unwrap();
    let a = build_algebra(&BoundQuiver::from_spec(&spec).unwrap(), DEFAULT_PATH_CAP).unwrap();
    assert_eq!(a.dim(), 11);
}

#[test]
fn cuts_of_example_three() {
    let bq = corpus::quiver("ex3_b").unwrap();
    let dims: Vec<usize> = corpus::ex3_cuts()
        .iter()
        .map(|c| apply_cut(&bq, c, DEFAULT_PATH_CAP).unwrap().algebra.dim())
        .collect();
    assert_eq!(dims, vec![9, 7, 7]);
}

#[test]
fn empty_cut_on_cyclic_algebra_rejected() {
    let bq = corpus::quiver("ex3_b").unwrap();
    let cut = Cut {
        name: "none".into(),
        arrows: vec![],
    };
    assert!(matches!(
        apply_cut(&bq, &cut, DEFAULT_PATH_CAP),
        Err(Error::NonHomogeneousCut(_))
    ));
}

#[test]
fn inhomogeneous_cut_rejected() {
    let bq = corpus::quiver("ex3_b").unwrap();
    // alpha·beta + gamma·delta would mix degrees 1 and 0
    let cut = Cut {
        name: "bad".into(),
        arrows: vec!["alpha".into(), "epsilon".into()],
    };
    assert!(matches!(
        apply_cut(&bq, &cut, DEFAULT_PATH_CAP),
        Err(Error::NonHomogeneousCut(_))
    ));
}

#[test]
fn unknown_cut_arrow_is_input_error() {
    let bq = corpus::quiver("ex3_b").unwrap();
    let cut = Cut {
        name: "x".into(),
        arrows: vec!["zeta".into()],
    };
    assert_eq!(
        apply_cut(&bq, &cut, DEFAULT_PATH_CAP)
            .unwrap_err()
            .exit_code(),
        2
    );
}
