"""Shared test utilities: seeded random algebra objects and property sweeps.

The check_* functions run the randomized property suites; they live here
so both the per-module tests and the acceptance gate can invoke them.
"""

import numpy as np

from tcc import (
    Felt,
    Matrix,
    Prime,
    SingularMatrixError,
    TwistSpec,
    Vector,
    inverse,
    kernel_basis,
    kronecker,
    rref,
    twisted_operator,
    unvec,
    vec,
)

SMALL_PRIMES = (2, 3, 5, 7)

GF2 = Prime(2)
GF3 = Prime(3)
GF5 = Prime(5)
GF7 = Prime(7)


def rand_matrix(rng, rows, cols, prime) -> Matrix:
    return Matrix(rng.integers(0, prime.p, size=(rows, cols)), prime)


def rand_vector(rng, n, prime) -> Vector:
    return Vector(rng.integers(0, prime.p, size=n), prime)


def rand_invertible(rng, n, prime) -> Matrix:
    while True:
        m = rand_matrix(rng, n, n, prime)
        try:
            inverse(m)
        except SingularMatrixError:
            continue
        return m


def _rand_prime(rng) -> Prime:
    return Prime(int(rng.choice(SMALL_PRIMES)))


def check_field_axioms(count=1000, seed=101):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        a, b, c = (Felt(int(v), prime) for v in rng.integers(0, prime.p, size=3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == Felt(0, prime)
        if a.value != 0:
            assert a * a.inverse() == Felt(1, prime)


def check_rref_idempotent(count=1000, seed=102):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        m = rand_matrix(rng, int(rng.integers(1, 7)), int(rng.integers(1, 8)), prime)
        reduced = rref(m)
        again = rref(reduced.matrix)
        assert again.matrix == reduced.matrix
        assert again.rank == reduced.rank
        assert again.pivots == reduced.pivots


def check_kernel(count=1000, seed=103):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        rows, cols = int(rng.integers(1, 6)), int(rng.integers(1, 7))
        m = rand_matrix(rng, rows, cols, prime)
        basis = kernel_basis(m)
        assert len(basis) == cols - rref(m).rank
        zero = Vector(np.zeros(rows, dtype=np.int64), prime)
        for v in basis:
            assert m @ v == zero


def check_vec_roundtrip(count=1000, seed=104):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        rows, cols = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        m = rand_matrix(rng, rows, cols, prime)
        assert unvec(vec(m), rows, cols) == m


def check_kron_mixed_product(count=1000, seed=105):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        r1, c1, r2, c2 = (int(v) for v in rng.integers(1, 4, size=4))
        k1, k2 = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        a = rand_matrix(rng, r1, k1, prime)
        c = rand_matrix(rng, k1, c1, prime)
        b = rand_matrix(rng, r2, k2, prime)
        d = rand_matrix(rng, k2, c2, prime)
        assert kronecker(a, b) @ kronecker(c, d) == kronecker(a @ c, b @ d)


def check_operator_identity(count=1000, seed=106):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        n = int(rng.integers(2, 5))
        a = rand_matrix(rng, n, n, prime)
        b = rand_matrix(rng, n, n, prime)
        twist = Felt(int(rng.integers(0, prime.p)), prime)
        op = twisted_operator(TwistSpec(a, twist))
        assert op @ vec(b) == vec(a @ b - (b @ a) * twist)


def check_inverse_roundtrip(count=1000, seed=107):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        n = int(rng.integers(1, 5))
        m = rand_invertible(rng, n, prime)
        ident = Matrix.identity(n, prime)
        assert m @ inverse(m) == ident
        assert inverse(m) @ m == ident


def check_vec_sandwich(count=1000, seed=108):
    """vec(A X B) == (B^T kron A) @ vec(X), the column-stacking identity."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        prime = _rand_prime(rng)
        r, s, t, u = (int(v) for v in rng.integers(1, 4, size=4))
        a = rand_matrix(rng, r, s, prime)
        x = rand_matrix(rng, s, t, prime)
        b = rand_matrix(rng, t, u, prime)
        assert vec((a @ x) @ b) == kronecker(b.T, a) @ vec(x)
