use autfield::certificate::{read_certificate, emit_certificate, validate, validate_certificate, RealizationCertificate};
use autfield::exact::parse_qpoly;
use autfield::groupspec::{named_group, parse_group_spec};
use autfield::numfield::{automorphisms, NumberField};
use autfield::pipeline::{run, DistinctMode, PairDistinctness, PipelineError, RunOptions};

fn realize(n: usize, gens: &str, opts: &RunOptions) -> RealizationCertificate {
    let spec = parse_group_spec(n, gens).unwrap();
    let r = run(&spec.group().unwrap(), opts).unwrap();
    RealizationCertificate::from_realization(&spec, &r, opts)
}

#[test]
fn every_subgroup_class_of_s3() {
    let opts = RunOptions { count: 1, ..RunOptions::default() };
    for (gens, order) in [("()", 1), ("(1 2)", 2), ("(1 2 3)", 3), ("(1 2);(1 2 3)", 6)] {
        let cert = realize(3, gens, &opts);
        let f = &cert.fields[0];
        assert_eq!((f.degree, f.automorphisms.len()), (18, order), "{gens}");
        let rep = validate(&cert, false).unwrap();
        assert!(rep.passed(), "{gens}\n{rep}");
    }
}

#[test]
fn s2_inside_s2_matches_direct_automorphisms() {
    let opts = RunOptions { count: 2, ..RunOptions::default() };
    let cert = realize(2, "(1 2)", &opts);
    for f in &cert.fields {
        let k = NumberField::new(parse_qpoly(&f.defining_polynomial).unwrap()).unwrap();
        assert_eq!(automorphisms(&k).unwrap().order(), 2);
    }
}

#[test]
fn assumed_distinctness_is_labelled() {
    let spec = named_group("S2").unwrap();
    let opts = RunOptions { count: 2, distinct: DistinctMode::Assumed, ..RunOptions::default() };
    let r = run(&spec.group().unwrap(), &opts).unwrap();
    assert!(!r.exact_distinctness);
    assert_eq!(r.pairs[0].evidence, PairDistinctness::Guaranteed);
    let cert = RealizationCertificate::from_realization(&spec, &r, &opts);
    let text = cert.to_json();
    assert!(text.contains("\"cite\": \"condition (eq)\""));
    assert!(validate(&cert, false).unwrap().passed());
}

#[test]
fn file_round_trip_and_tampering() {
    let opts = RunOptions { count: 3, t_max: 10, ..RunOptions::default() };
    let cert = realize(1, "()", &opts);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trivial.json");
    emit_certificate(&cert, &path).unwrap();
    let back = read_certificate(&path).unwrap();
    assert_eq!(back.to_json(), std::fs::read_to_string(&path).unwrap());
    assert!(validate_certificate(&path, true).unwrap().passed());

    let mut bad = back.clone();
    bad.fields[2].automorphisms[0] = vec!["1".into()];
    let rep = validate(&bad, false).unwrap();
    let failed: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
    assert!(failed.iter().any(|n| n.starts_with("field 3") && n.ends_with("automorphisms")), "{failed:?}");

    let mut wrong_pair = back;
    wrong_pair.pairs.pop();
    assert!(validate(&wrong_pair, false).unwrap().failures().any(|c| c.name == "distinctness"));
}

#[test]
fn deep_validation_catches_a_forged_field() {
    // the field itself is still a valid field, only its link to q(t0, X) breaks
    let opts = RunOptions { count: 3, t_max: 10, ..RunOptions::default() };
    let mut cert = realize(1, "()", &opts);
    cert.fields[0].t0 = "5".into();
    let rep = validate(&cert, true).unwrap();
    assert!(rep.failures().any(|c| c.name.contains("defining polynomial")));
    assert!(rep.failures().any(|c| c.name.starts_with("deep:")));
}

#[test]
fn precondition_errors() {
    let g = parse_group_spec(1, "()").unwrap().group().unwrap();
    let opts = RunOptions { count: 0, ..RunOptions::default() };
    assert_eq!(run(&g, &opts).unwrap_err(), PipelineError::ZeroCount);
    let s4 = named_group("S4").unwrap().group().unwrap();
    let capped = RunOptions { max_splitting_degree: 6, ..RunOptions::default() };
    assert!(run(&s4, &capped).unwrap_err().is_cap());
}
