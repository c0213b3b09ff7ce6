"""Randomized property suites over seeded samples; 1000 instances each."""

import helpers


def test_field_axioms_hold():
    helpers.check_field_axioms(1000)


def test_rref_is_idempotent():
    helpers.check_rref_idempotent(1000)


def test_kernel_bases_are_correct():
    helpers.check_kernel(1000)


def test_vec_unvec_roundtrip():
    helpers.check_vec_roundtrip(1000)


def test_kronecker_mixed_product():
    helpers.check_kron_mixed_product(1000)


def test_twisted_operator_linearizes_commutation():
    helpers.check_operator_identity(1000)


def test_inverse_roundtrip():
    helpers.check_inverse_roundtrip(1000)


def test_vec_sandwich_identity():
    helpers.check_vec_sandwich(1000)
