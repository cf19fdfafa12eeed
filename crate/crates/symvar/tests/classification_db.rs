//! End-to-end checks of the shipped classification database: every entry
//! passes all recomputed invariants, deliberately corrupted entries fail
//! for the stated reason, the non-homogeneous set and the nesting chain
//! are exactly as stored, and slice-weight certificates match the known
//! non-dominant weights.

use num_traits::One;

use symvar::classification::{
    builtin_db, entry_slice_coeffs, negative_controls, parse_db, printed_coeffs, verify_entry,
    verify_nesting, verify_rank_one,
};
use symvar::root_data::Rat;

#[test]
fn every_entry_passes_all_checks() {
    let db = builtin_db().expect("embedded database parses");
    assert_eq!(db.entries.len(), 19);
    for entry in &db.entries {
        let report = verify_entry(entry);
        assert!(
            report.pass,
            "entry {} failed:\n{:#?}",
            entry.id,
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn every_rank_one_record_passes_its_dimension_audit() {
    let db = builtin_db().unwrap();
    assert_eq!(db.rank_one.len(), 8);
    for rec in &db.rank_one {
        let report = verify_rank_one(rec);
        assert!(report.pass, "rank-one record {} failed: {:#?}", rec.id, report.checks);
    }
}

#[test]
fn nesting_chain_dimensions_strictly_increase() {
    let db = builtin_db().unwrap();
    let report = verify_nesting(&db);
    assert!(report.pass, "{:#?}", report.checks);
}

#[test]
fn the_non_homogeneous_entries_are_the_six_fixed_point_a2_and_g2_cases() {
    let db = builtin_db().unwrap();
    let mut ids: Vec<&str> = db
        .entries
        .iter()
        .filter(|e| !e.homogeneous)
        .map(|e| e.id.as_str())
        .collect();
    ids.sort_unstable();
    assert_eq!(
        ids,
        vec![
            "a2.fixed.e6f4",
            "a2.fixed.group",
            "a2.fixed.so3",
            "a2.fixed.sp6",
            "g2.group",
            "g2.split"
        ]
    );
}

#[test]
fn negative_controls_fail_exactly_the_expected_check() {
    let db = builtin_db().unwrap();
    let controls = negative_controls(&db).unwrap();
    assert_eq!(controls.len(), 6);
    for ctl in controls {
        let report = verify_entry(&ctl.entry);
        assert!(!report.pass, "control {} unexpectedly passed", ctl.label);
        let failed = report
            .checks
            .iter()
            .any(|c| c.name == ctl.expect_failed_check && !c.pass);
        assert!(
            failed,
            "control {} did not fail check {}: {:#?}",
            ctl.label, ctl.expect_failed_check, report.checks
        );
    }
}

#[test]
fn slice_weights_of_the_special_entries_are_the_known_non_dominant_ones() {
    let db = builtin_db().unwrap();
    let one = Rat::one();

    // restricted G2 (split case): conventional labels read -w1 + w2
    let g2 = db.entries.iter().find(|e| e.id == "g2.split").unwrap();
    let coeffs = entry_slice_coeffs(g2, 0).unwrap();
    let printed = printed_coeffs(g2, &coeffs);
    assert_eq!(printed, vec![-one.clone(), one.clone()]);

    // restricted G2, group case: same weight
    let g2g = db.entries.iter().find(|e| e.id == "g2.group").unwrap();
    let coeffs = entry_slice_coeffs(g2g, 0).unwrap();
    assert_eq!(printed_coeffs(g2g, &coeffs), vec![-one.clone(), one.clone()]);

    // restricted A2 fixed-point cases: w1 - w2 at one closed orbit and
    // w2 - w1 at the other
    for id in ["a2.fixed.so3", "a2.fixed.group", "a2.fixed.sp6", "a2.fixed.e6f4"] {
        let e = db.entries.iter().find(|x| x.id == id).unwrap();
        let c0 = entry_slice_coeffs(e, 0).unwrap();
        let c1 = entry_slice_coeffs(e, 1).unwrap();
        let mut both = vec![c0, c1];
        both.sort_by(|a, b| a[0].cmp(&b[0]));
        assert_eq!(both[0], vec![-one.clone(), one.clone()], "{}", id);
        assert_eq!(both[1], vec![one.clone(), -one.clone()], "{}", id);
    }
}

#[test]
fn malformed_database_text_is_rejected() {
    assert!(parse_db("{").is_err());
    assert!(parse_db("{\"schema\":\"bogus\",\"entries\":[],\"rank_one\":[],\"nesting_chain\":[]}").is_err());
}
