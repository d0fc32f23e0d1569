//! Acceptance suite: one test per verification criterion, each printing its
//! pass/fail line. `canalize verify` runs the same checks from the command
//! line.

use canalize::verify::{self, VerifyConfig};

fn run(check: fn(VerifyConfig) -> verify::CheckResult) {
    let result = check(VerifyConfig::default());
    println!("{}", result.line());
    assert!(result.pass, "{}", result.line());
}

#[test]
fn criterion_01_two_variable_census() {
    run(verify::census_two_variables);
}

#[test]
fn criterion_02_detector_equivalence() {
    run(verify::detector_equivalence);
}

#[test]
fn criterion_03_concatenation_lemmas() {
    run(verify::lemma_suites);
}

#[test]
fn criterion_04_single_minority_counts() {
    run(verify::single_minority_counts);
}

#[test]
fn criterion_05_family_generation() {
    run(verify::family_generation);
}

#[test]
fn criterion_06_ncf_counts() {
    run(verify::ncf_counts);
}

#[test]
fn criterion_07_hd_matrix() {
    run(verify::matrix_recursion);
}

#[test]
fn criterion_08_hd_histogram() {
    run(verify::histogram_vs_matrix);
}

#[test]
fn criterion_09_depth_census() {
    run(verify::depth_census);
}

#[test]
fn criterion_10_determinism() {
    run(verify::determinism);
}
