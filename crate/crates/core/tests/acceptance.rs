//! Full verification gate at the documented scales. Each test is one
//! criterion; a failure prints every failing case with its diagnostic note.

use kacgen_core::tag::Family;
use kacgen_core::verify::{self, CaseOutcome};

const SWEEP_FAMILIES: [Family; 5] = [
    Family::B,
    Family::C,
    Family::D,
    Family::TwoA,
    Family::TwoD,
];

fn assert_all(label: &str, cases: &[CaseOutcome]) {
    let failures: Vec<String> = cases
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("  {}: {}", c.name, c.note))
        .collect();
    assert!(
        failures.is_empty(),
        "{label}: {} of {} cases failed\n{}",
        failures.len(),
        cases.len(),
        failures.join("\n")
    );
    assert!(!cases.is_empty(), "{label}: campaign produced no cases");
}

#[test]
fn worked_example_diagrams_reproduce_exactly() {
    assert_all("golden diagrams", &verify::golden_diagrams().unwrap());
}

#[test]
fn characteristic_polynomials_separate_classes_at_desk_scale() {
    for family in SWEEP_FAMILIES {
        assert_all(
            "charpoly injectivity",
            &verify::charpoly_injectivity(family, 12).unwrap(),
        );
    }
}

#[test]
fn normalized_kac_diagrams_separate_classes_at_desk_scale() {
    for family in SWEEP_FAMILIES {
        assert_all(
            "diagram injectivity",
            &verify::diagram_injectivity(family, 12).unwrap(),
        );
    }
}

#[test]
fn closed_formulas_match_matrix_oracles() {
    for family in [Family::A, Family::B, Family::C, Family::D, Family::TwoD] {
        assert_all("oracle agreement", &verify::oracle_agreement(family, 8).unwrap());
    }
    assert_all(
        "oracle agreement",
        &verify::oracle_agreement(Family::TwoA, 7).unwrap(),
    );
}

#[test]
fn partition_recovery_inverts_the_charpoly_formula() {
    assert_all("partition recovery", &verify::recover_round_trip(11).unwrap());
}

#[test]
fn torus_form_charpolys_agree_with_block_decomposition() {
    assert_all("sigma blocks", &verify::sigma_block_consistency(7).unwrap());
}

#[test]
fn weyl_group_counts_and_criteria_cross_check() {
    assert_all("weyl cross-checks", &verify::weyl_cross_checks(5).unwrap());
}

#[test]
fn lift_orders_match_canonical_values() {
    for family in [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::TwoA,
        Family::TwoD,
    ] {
        assert_all("lift orders", &verify::order_checks(family, 8).unwrap());
    }
}

#[test]
fn power_maps_preserve_conjugacy_in_small_weyl_groups() {
    assert_all("rationality", &verify::rationality_sweep(Family::A, 5).unwrap());
    for family in [Family::B, Family::C, Family::D] {
        assert_all("rationality", &verify::rationality_sweep(family, 4).unwrap());
    }
}

#[test]
fn diagram_identities_hold_before_normalization() {
    for family in SWEEP_FAMILIES {
        assert_all(
            "structural identities",
            &verify::structural_identities(family, 12).unwrap(),
        );
    }
}
