mod common;

use common::*;

#[test]
fn residual_vanishes_on_every_basis_element() {
    check_residuals(&suite()).unwrap();
}

#[test]
fn direct_sum_is_additive() {
    check_direct_sum_additivity().unwrap();
}

#[test]
fn tensor_invariants_formula() {
    check_tensor_formula().unwrap();
}

#[test]
fn grading_does_not_change_the_basis() {
    check_graded_equals_ungraded(&suite()).unwrap();
}

#[test]
fn fraction_free_matches_schoolbook_elimination() {
    check_bareiss_vs_naive(&suite()).unwrap();
}

#[test]
fn random_deltas_are_generic() {
    check_random_deltas(&suite(), 0x5eed).unwrap();
}

#[test]
fn one_derivations_are_inner() {
    check_whitehead(&suite()).unwrap();
}
