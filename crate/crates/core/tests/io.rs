use ctalg::corpus;
use ctalg::io::*;
use ctalg::modrep::*;
use ctalg::relext::relation_extension;

#[test]
fn structure_table_round_trip() {
    let c = corpus::algebra("ex1_c").unwrap();
    let b = relation_extension("ex1", &c, 1).unwrap().b;
    let t = AlgebraTable::from_algebra(&b);
    let text = serde_json::to_string(&t).unwrap();
    let back: AlgebraTable = serde_json::from_str(&text).unwrap();
    let again = back.to_algebra().unwrap();
    assert!(again.same_tables(&b));
    assert_eq!(again.gabriel_quiver(), b.gabriel_quiver());
}

#[test]
fn broken_table_rejected() {
    let c = corpus::algebra("a2").unwrap();
    let mut t = AlgebraTable::from_algebra(&c);
    t.products
        .retain(|p| !(p.left == p.right && t.idempotents.contains(&p.left)));
    assert!(t.to_algebra().is_err());
}

#[test]
fn module_round_trip_over_corpus() {
    let c = corpus::algebra("ex2_c").unwrap();
    for i in 0..c.num_vertices() {
        for m in [projective(&c, i), injective(&c, i), Module::simple(&c, i)] {
            let back = ModuleFile::from_module(&m).to_module(&c).unwrap();
            assert_eq!(back.dims(), m.dims());
            assert!(are_isomorphic(&back, &m, 1).is_yes());
        }
    }
}

#[test]
fn short_specs() {
    let c = corpus::algebra("ex1_c").unwrap();
    assert_eq!(parse_module(&c, "S:3").unwrap().dims(), &[0, 0, 1, 0, 0]);
    assert_eq!(parse_module(&c, "radI:2").unwrap().loewy_string(), "3/2");
    assert!(are_isomorphic(&parse_module(&c, "P:1").unwrap(), &projective(&c, 0), 1).is_yes());
    assert!(parse_module(&c, "S:9").is_err());
    assert!(parse_module(&c, "Q:1").is_err());
}

#[test]
fn module_file_shape_errors() {
    let c = corpus::algebra("a2").unwrap();
    let bad = r#"{"dims": {"1": 1, "2": 1}, "arrows": {"a": [["1", "0"]]}}"#;
    assert!(matches!(
        parse_module(&c, bad),
        Err(ctalg::Error::ShapeMismatch(_))
    ));
    let unknown = r#"{"dims": {"7": 1}}"#;
    assert_eq!(parse_module(&c, unknown).unwrap_err().exit_code(), 2);
    let ok = r#"{"dims": {"1": 1, "2": 1}, "arrows": {"a": [["1"]]}}"#;
    assert!(are_isomorphic(&parse_module(&c, ok).unwrap(), &projective(&c, 0), 1).is_yes());
}
