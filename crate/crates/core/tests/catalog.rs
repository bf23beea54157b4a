use rplie::catalog::{families, lookup, sample, select, verify_der_column, verify_families};
use rplie::random::rng;

#[test]
fn lookup_variants() {
    let t3r5 = lookup("t3.r5").unwrap();
    assert_eq!(t3r5.len(), 2);
    assert!(!t3r5[0].is_corrected());
    assert_eq!(t3r5[1].label(), "T3.R5 (corrected)");
    assert!(lookup("T10.R1").is_err());
    assert_eq!(select(Some(2), None).len(), 8);
}

#[test]
fn first_table_verifies() {
    let fams = select(Some(1), None);
    for r in verify_families(&fams, 3, 0) {
        assert!(r.all_passed(), "{} {:?}", r.label, r.main_failure());
    }
}

#[test]
fn duplicate_bracket_rows_fail_verbatim() {
    for id in ["T9.R1", "T9.R2", "T9.R3"] {
        let fams = lookup(id).unwrap();
        let reports = verify_families(&fams, 2, 0);
        assert_eq!(reports[0].passed(), 0, "{id}");
        assert!(reports[1].all_passed(), "{id} corrected");
    }
}

#[test]
fn derivation_column() {
    let mut rng = rng(3);
    for fam in select(Some(3), None) {
        let params = sample(fam, &mut rng).unwrap();
        let ok = verify_der_column(fam, &params).unwrap();
        assert_eq!(ok, fam.id != "T3.R5" || fam.is_corrected(), "{}", fam.label());
    }
}

#[test]
fn verification_is_reproducible() {
    let fams: Vec<_> = families().iter().take(4).collect();
    assert_eq!(verify_families(&fams, 3, 7), verify_families(&fams, 3, 7));
}
