use brauerkit::adjunction::axioms::{adjunction_axioms, subsided_equations};
use brauerkit::adjunction::enumerate::enumerate_arrows;
use brauerkit::adjunction::{equal_k, equiv_k, psi, xi};
use brauerkit::matrep::verify::{verify_faithfulness_with, verify_subsided_mat_with};
use brauerkit::matrep::DEFAULT_DIM_CAP;
use brauerkit::par::Exec;

#[test]
fn adjunction_axioms_hold() {
    for e in adjunction_axioms(3) {
        assert!(equal_k(&e.lhs, &e.rhs), "{}: {} = {}", e.name, e.lhs, e.rhs);
    }
}

#[test]
fn subsided_equations_hold() {
    for e in subsided_equations(3) {
        assert!(equal_k(&e.lhs, &e.rhs), "{}: {} = {}", e.name, e.lhs, e.rhs);
    }
}

#[test]
fn xi_after_psi_is_equivalent() {
    for f in &enumerate_arrows(2, 5) {
        assert!(equiv_k(&xi(&psi(f)), f), "{f}");
    }
}

#[test]
fn sweeps_do_not_depend_on_scheduling() {
    let seq = verify_faithfulness_with(Exec::Sequential, 2, 4, 2, DEFAULT_DIM_CAP);
    let par = verify_faithfulness_with(Exec::Parallel, 2, 4, 2, DEFAULT_DIM_CAP);
    assert_eq!(seq, par);
    assert!(seq.passed(), "{seq:?}");
    assert!(seq.boolean_mismatches.is_empty(), "{:?}", seq.boolean_mismatches);

    let seq = verify_subsided_mat_with(Exec::Sequential, 4, 40, 9);
    let par = verify_subsided_mat_with(Exec::Parallel, 4, 40, 9);
    assert_eq!(seq, par);
    assert!(seq.passed(), "{:?}", seq.failures);
}
