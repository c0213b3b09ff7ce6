"""Twisted centralizers C(A, a) = {B : AB = aBA} as solvable linear systems.

The membership condition is linear in B, so column-stacking turns it into
an ordinary kernel problem: with T = (I (x) A) - a * (A^T (x) I) we have
T vec(B) = vec(AB - aBA), and C(A, a) is exactly unvec of ker(T).  A
hard-guarded exhaustive enumeration of all n x n matrices doubles as an
independent oracle for the kernel solver.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import (
    Felt,
    FieldMismatchError,
    GuardExceededError,
    Matrix,
    Prime,
    Vector,
    inverse,
    kernel_basis,
    kronecker,
    matmul_mod,
    rref,
    unvec,
    vec,
)
from .comb import MAX_ORDER

BRUTE_FORCE_LIMIT = 1 << 20
_CHUNK = 1 << 15


@dataclass(frozen=True)
class TwistSpec:
    """A fixed square matrix and the twist constant defining AB = aBA."""

    matrix: Matrix
    twist: Felt

    def __post_init__(self):
        if not self.matrix.is_square:
            raise ValueError(f"the fixed matrix must be square, got {self.matrix.rows}x{self.matrix.cols}")
        if self.matrix.rows > MAX_ORDER:
            raise ValueError(f"order {self.matrix.rows} exceeds the cap {MAX_ORDER}")
        if self.matrix.prime != self.twist.prime:
            raise FieldMismatchError(
                f"matrix over GF({self.matrix.prime.p}) but twist over GF({self.twist.prime.p})"
            )

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def prime(self) -> Prime:
        return self.matrix.prime


@dataclass(frozen=True)
class CentralizerBasis:
    """A basis of C(A, a) whose vec images form an RREF generator matrix.

    The RREF normalization makes bases canonical: two centralizers are
    equal iff their bases are identical, with no span chasing.
    """

    spec: TwistSpec
    basis: tuple[Matrix, ...]

    def __post_init__(self):
        for b in self.basis:
            if not is_member(b, self.spec):
                raise ValueError("basis matrix fails the twisted commutation condition")

    @property
    def dim(self) -> int:
        return len(self.basis)


def twisted_operator(spec: TwistSpec) -> Matrix:
    """The n^2 x n^2 matrix T with T vec(B) = vec(AB - a BA)."""
    a = spec.matrix
    ident = Matrix.identity(spec.n, spec.prime)
    return kronecker(ident, a) - kronecker(a.T, ident) * spec.twist


def _normalized(spec: TwistSpec, raw_vecs: list[Vector]) -> CentralizerBasis:
    if not raw_vecs:
        return CentralizerBasis(spec, ())
    stacked = Matrix(np.vstack([v.array for v in raw_vecs]), spec.prime)
    reduced = rref(stacked).matrix
    n = spec.n
    mats = tuple(unvec(reduced.row(i), n, n) for i in range(reduced.rows))
    return CentralizerBasis(spec, mats)


def centralizer_code(spec: TwistSpec) -> CentralizerBasis:
    """Solve AB = aBA: the kernel of the twisted operator, RREF-normalized.

    Dimension equals n^2 - rank(T); ordering is inherited from the
    deterministic kernel basis, then canonicalized by row reduction.
    """
    return _normalized(spec, kernel_basis(twisted_operator(spec)))


def is_member(b: Matrix, spec: TwistSpec) -> bool:
    """Exact entrywise test of A @ B == a * (B @ A)."""
    if b.shape != spec.matrix.shape:
        raise ValueError(f"expected a {spec.n}x{spec.n} matrix, got {b.rows}x{b.cols}")
    if b.prime != spec.prime:
        raise FieldMismatchError(f"matrix over GF({b.prime.p}) against a GF({spec.prime.p}) centralizer")
    return spec.matrix @ b == (b @ spec.matrix) * spec.twist


def brute_force_centralizer(spec: TwistSpec) -> list[Matrix]:
    """Oracle: enumerate all p^(n^2) matrices and keep the members.

    Exists to cross-check the kernel solver on tiny cases; hard-guarded so
    it cannot be reached with more than 2^20 candidates.  Results come in
    lexicographic order of the row-major entries, independent of chunking.
    """
    p = spec.prime.p
    n = spec.n
    cells = n * n
    total = p**cells
    if total > BRUTE_FORCE_LIMIT:
        raise GuardExceededError(
            f"brute force over GF({p})^({n}x{n}) means {total} candidates, "
            f"beyond the {BRUTE_FORCE_LIMIT} guard"
        )
    a_arr = spec.matrix.array
    twist = spec.twist.value
    powers = p ** np.arange(cells - 1, -1, -1, dtype=np.int64)
    members = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % p
        candidates = digits.reshape(-1, n, n)
        lhs = matmul_mod(a_arr, candidates, p)
        rhs = (matmul_mod(candidates, a_arr, p) * twist) % p
        for b in candidates[np.all(lhs == rhs, axis=(1, 2))]:
            members.append(Matrix(b, spec.prime))
    return members


def conjugation_transfer(
    basis_d: CentralizerBasis,
    transform: Matrix,
    target: TwistSpec | None = None,
) -> CentralizerBasis:
    """Carry a basis of C(D, a) over to C(A, a) along D = P A P^-1.

    Each member B maps to P^-1 B P.  When ``target`` names the intended
    (A, a), every image is verified against it, which catches a transform
    that does not actually conjugate A to D; with no target, A is derived
    as P^-1 D P.  The result is RREF-normalized and dimension-preserving.
    """
    d = basis_d.spec.matrix
    if transform.shape != d.shape:
        raise ValueError(f"transform shape {transform.shape} does not match order {d.rows}")
    p_inv = inverse(transform)
    if target is None:
        target = TwistSpec((p_inv @ d) @ transform, basis_d.spec.twist)
    elif target.twist != basis_d.spec.twist or target.matrix.shape != d.shape:
        raise ValueError("target spec does not match the basis being transferred")
    carried = []
    for b in basis_d.basis:
        image = (p_inv @ b) @ transform
        if not is_member(image, target):
            raise ValueError("conjugation transfer broke membership; is D = P A P^-1?")
        carried.append(vec(image))
    result = _normalized(target, carried)
    if result.dim != basis_d.dim:
        raise ValueError("conjugation transfer changed the dimension")
    return result
