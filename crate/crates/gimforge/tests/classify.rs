use gimforge::classify::{all_labels, classify, gim_from_toroidal, reduce_positive, template, Family, ModifiedDynkinType};
use gimforge::gim::{validate_gim, Gim};
use gimforge::Error;

fn gim(rows: &[&[i64]]) -> Gim {
    validate_gim(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn example_one_is_a3() {
    let report = classify(&gim(&[&[2, -1, 1], &[-1, 2, -1], &[1, -1, 2]])).unwrap();
    assert_eq!(report.label.to_string(), "A_3(1)");
    assert_eq!(report.corank, 0);
    let n = gim(&[&[2, -1, -1], &[-1, 2, 0], &[-1, 0, 2]]);
    assert!(report.reduced_gim().isomorphism_to(&n).is_some());
    assert!(report.complete);
}

#[test]
fn example_two_is_affine_a2() {
    let report = classify(&gim(&[&[2, -1, 2], &[-1, 2, -1], &[2, -1, 2]])).unwrap();
    assert_eq!(report.corank, 1);
    assert_eq!(report.reduced_gim().rows(), &[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    assert_eq!(report.label.to_string(), "A_2(2)");
    assert_eq!(report.affine.as_deref(), Some("A_2^(1)"));
    assert_eq!(report.certificate.replay(&gimforge::braid::PrimeBasis::standard(report.reduced.space().clone())).unwrap(), report.reduced);
}

#[test]
fn g2_is_fixed() {
    let report = classify(&gim(&[&[2, -1], &[-3, 2]])).unwrap();
    assert_eq!(report.label.to_string(), "G_2(1,1)");
    assert!(report.certificate.is_empty());
}

#[test]
fn rejects_out_of_scope_inputs() {
    assert!(matches!(classify(&gim(&[&[2, -3], &[-3, 2]])), Err(Error::Indefinite)));
    match classify(&gim(&[&[2, 0, 0], &[0, 2, -1], &[0, -1, 2]])) {
        Err(Error::Decomposable(blocks)) => assert_eq!(blocks, vec![vec![0], vec![1, 2]]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn every_template_classifies_to_its_label() {
    let mut failures = Vec::new();
    for label in all_labels(6, 3) {
        let (m, _) = template(&label).unwrap();
        match classify(&m) {
            Ok(r) if r.label == label && r.complete => {}
            Ok(r) => failures.push(format!("{label} -> {}", r.label)),
            Err(e) => failures.push(format!("{label} -> {e}")),
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn b3_template_has_doubled_first_node() {
    let label: ModifiedDynkinType = "B_3(2,1)".parse().unwrap();
    let (m, _) = template(&label).unwrap();
    assert_eq!(m.n(), 4);
    assert_eq!(classify(&m).unwrap().label, label);
}

#[test]
fn toroidal_examples() {
    let a2 = gim(&[&[2, -1], &[-1, 2]]);
    assert_eq!(gim_from_toroidal(&a2, 1).unwrap().rows(), &[vec![2, 2, -1], vec![2, 2, -1], vec![-1, -1, 2]]);
    assert_eq!(gim_from_toroidal(&gim(&[&[2]]), 1).unwrap().rows(), &[vec![2, 2], vec![2, 2]]);
    assert!(gim_from_toroidal(&a2, 0).is_err());
    assert!(matches!(gim_from_toroidal(&gim(&[&[2, -2], &[-1, 2]]), 1), Err(Error::FirstRootNotLong)));
    assert!(matches!(gim_from_toroidal(&gim(&[&[2, -2], &[-2, 2]]), 1), Err(Error::NotFiniteType)));
    let report = classify(&gim_from_toroidal(&a2, 1).unwrap()).unwrap();
    assert_eq!((report.corank, report.label.family), (1, Family::A));
    assert_eq!(report.affine.as_deref(), Some("A_2^(1)"));
}

#[test]
fn reduce_positive_on_templates() {
    for name in ["A_4(1)", "B_3(1,1)", "C_3(1,1)", "D_5(1)", "E_6(1)", "F_4(1,1)", "G_2(1,1)"] {
        let (m, _) = template(&name.parse().unwrap()).unwrap();
        let (n, cert) = reduce_positive(&m).unwrap();
        assert_eq!(n, m);
        assert!(cert.is_empty());
    }
}
