use proptest::prelude::*;

use ctalg::corpus;
use ctalg::io::ModuleFile;
use ctalg::modrep::*;
use ctalg::present::*;
use ctalg::relext::*;
use ctalg::report::{multiplicities, PresentReport, RunInfo};

fn ctx(name: &str) -> ExtensionContext {
    relation_extension(name, &corpus::algebra(name).unwrap(), 1).unwrap()
}

fn ex1_m() -> (ExtensionContext, Module) {
    let x = ctx("ex1_c");
    let m = injective(&x.c, 1).radical().0;
    (x, m)
}

fn add(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[test]
fn oracle_accepts_the_minimal_presentation() {
    let (x, m) = ex1_m();
    let ind = x.induce(&m);
    let ip = min_inj_presentation(&ind);
    let l = vertices_to_multiplicities(5, &ip.i0.vertices);
    let r = vertices_to_multiplicities(5, &ip.i1);
    let v = oracle_verify(&ind, &l, &r);
    assert!(v.accepted);
    assert_eq!(v.k, vec![0; 5]);
}

#[test]
fn oracle_rejects_missing_summands() {
    let (x, m) = ex1_m();
    let ind = x.induce(&m);
    let v = oracle_verify(&ind, &[0; 5], &[0; 5]);
    assert!(!v.accepted);
    assert!(matches!(
        v.into_result(),
        Err(ctalg::Error::TermsDoNotPresent(_))
    ));
    // a surplus in the first term must reappear in the second
    let v = oracle_verify(&ind, &[0, 1, 1, 0, 0], &[1, 0, 0, 0, 1]);
    assert!(!v.accepted);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Padding with `K → K` and `0 → L` is recovered exactly, and explicit
    /// maps with those terms still exist.
    #[test]
    fn oracle_recovers_padding(k in prop::collection::vec(0usize..2, 5), l in prop::collection::vec(0usize..2, 5)) {
        let (x, m) = ex1_m();
        let ind = x.induce(&m);
        let p = present(&m, &x, 1).unwrap();
        let left = add(&p.terms.left, &k);
        let right = add(&add(&p.terms.right, &k), &l);
        let v = oracle_verify(&ind, &left, &right);
        prop_assert!(v.accepted);
        prop_assert_eq!(&v.k, &k);
        prop_assert_eq!(&v.l, &l);
        let cert = build_certificate(&ind, &left, &right, 5, 64).unwrap();
        prop_assert!(cert.is_exact());
    }
}

#[test]
fn clause_dispatch() {
    let (x, m) = ex1_m();
    assert_eq!(theorem_terms(&m, &x, 1).unwrap().clause, Clause::PdTwo);
    let c = &x.c;
    // an injective non-projective module of projective dimension at most one
    let inj = (0..5)
        .map(|i| injective(c, i))
        .find(|i| projective_dimension(i, 3).at_most(1) && !is_projective(i))
        .unwrap();
    assert_eq!(
        theorem_terms(&inj, &x, 1).unwrap().clause,
        Clause::Injective
    );
    for i in 0..5 {
        let p = projective(c, i);
        let t = theorem_terms(&p, &x, 1).unwrap();
        let expect = match injective_dimension(&p, 3) {
            Dimension::Exactly(0) => Clause::Injective,
            Dimension::Exactly(1) => Clause::IdOne,
            _ => Clause::PdAtMostOne,
        };
        assert_eq!(t.clause, expect);
    }
}

#[test]
fn tilde_equals_second_term_when_id_at_most_one() {
    let x = ctx("ex2_c");
    for i in 0..5 {
        let p = projective(&x.c, i);
        if injective_dimension(&p, 3).at_most(1) {
            let t = theorem_terms(&p, &x, 1).unwrap();
            assert_eq!(t.tilde, t.i1);
        }
    }
}

#[test]
fn hereditary_presentations_are_minimal() {
    let x = ctx("a3");
    for i in 0..3 {
        for m in [
            Module::simple(&x.c, i),
            projective(&x.c, i),
            injective(&x.c, i),
        ] {
            let p = present(&m, &x, 1).unwrap();
            assert_eq!(p.oracle.k, vec![0; 3]);
            assert_eq!(p.oracle.l, vec![0; 3]);
            assert_eq!(p.terms.i0_bar, vec![0; 3]);
            assert_eq!(p.terms.hat, vec![0; 3]);
        }
    }
}

#[test]
fn cokernel_matches_ext_one() {
    let x = ctx("ex2_c");
    let mut seen = 0;
    for i in 0..5 {
        for m in [Module::simple(&x.c, i), projective(&x.c, i)] {
            if projective_dimension(&m, 3).at_most(1) && !is_injective(&m) {
                let r = ext1_cokernel_check(&m, &x, 1).unwrap();
                assert!(r.passed, "{r:?}");
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn cokernel_comparison_needs_small_pd() {
    let (x, m) = ex1_m();
    let err = ext1_cokernel_check(&m, &x, 1).unwrap_err();
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn gorenstein_tables() {
    for name in ["ex1_c", "a3_rel", "a2"] {
        let rows = gorenstein_report(&ctx(name), 1).unwrap();
        for r in rows {
            assert!(
                ["0", "1"].contains(&r.id_projective.as_str()),
                "{name} {r:?}"
            );
            assert!(
                ["0", "1"].contains(&r.pd_injective.as_str()),
                "{name} {r:?}"
            );
        }
    }
}

#[test]
fn non_projective_resolution_rejected() {
    let (x, m) = ex1_m();
    let err = projective_injective_resolution(&m, &x, 1).unwrap_err();
    assert!(matches!(err, ctalg::Error::NotProjective(_)));
}

#[test]
fn dual_presentation_of_example_one() {
    let (x, m) = ex1_m();
    let d = dual_presentation(&m, &x, 1).unwrap();
    assert!(d.oracle.accepted);
    assert_eq!(d.coinduced.dim(), m.dim() + x.cohom_e(&m, 1).unwrap().dim());
}

#[test]
fn dual_presentation_of_projective_with_small_id() {
    let x = ctx("ex2_c");
    for i in 0..5 {
        let p = projective(&x.c, i);
        if injective_dimension(&p, 3).at_most(1) {
            let d = dual_presentation(&p, &x, 1).unwrap();
            assert!(are_isomorphic(&d.coinduced, &x.inflate(&p), 1).is_yes());
        }
    }
}

#[test]
fn injective_trace_has_one_step() {
    let x = ctx("ex1_c");
    let i = injective(&x.b, 2);
    let tr = iterate_resolution(&i, std::slice::from_ref(&x), 4, 1).unwrap();
    assert_eq!(tr.stop, StopReason::Finite);
    assert_eq!(tr.steps.len(), 1);
    assert_eq!(tr.steps[0].left, vertices_to_multiplicities(5, &[2]));
}

#[test]
fn orphan_module_stops_the_trace() {
    // over the second cut of the D₄ example, 1/(2 3) is not induced
    let bq = corpus::quiver("ex3_b").unwrap();
    let cut = &corpus::ex3_cuts()[1];
    let x = context_from_cut(&bq, cut, ctalg::algebra::DEFAULT_PATH_CAP, 1).unwrap();
    let p = projective(x.ambient_algebra(), 0);
    let m = p.quotient(&p.radical_of(&p.radical_rows())).0;
    let tr = iterate_resolution(&m, std::slice::from_ref(&x), 4, 1).unwrap();
    assert_eq!(tr.stop, StopReason::NoInducingCut("1/(2 3)".into()));
}

#[test]
fn report_reverifies_after_round_trip() {
    let (x, m) = ex1_m();
    let p = present(&m, &x, 1).unwrap();
    let run = RunInfo {
        field: "Q".into(),
        seed: 1,
        iso_trials: DEFAULT_ISO_TRIALS,
        path_cap: 8,
        max_steps: 0,
    };
    let report = PresentReport::new("ex1", m.loewy_string(), &p, run);
    let text = serde_json::to_string(&report).unwrap();
    let back: PresentReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    let left = multiplicities(&x.b, &back.terms.left).unwrap();
    let right = multiplicities(&x.b, &back.terms.right).unwrap();
    assert_eq!(oracle_verify(&p.induced, &left, &right), p.oracle);
    // the serialized module rebuilds to the same module
    let mf: ModuleFile =
        serde_json::from_str(&serde_json::to_string(&ModuleFile::from_module(&m)).unwrap())
            .unwrap();
    assert!(are_isomorphic(&mf.to_module(&x.c).unwrap(), &m, 1).is_yes());
}
