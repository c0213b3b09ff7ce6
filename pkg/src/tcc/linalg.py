"""Exact dense linear algebra over prime fields GF(p).

Matrices and vectors carry their field with them and every operation is a
pure function on fully reduced residues: Gauss-Jordan elimination, kernel
bases, inverses, Kronecker products and column-stacking vectorization.
These are the primitives everything else (spectra, centralizer solving,
code analysis) is built on.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Desk-scale caps: order-64 square matrices flatten to length-4096 words.
MAX_DIM = 4096
MAX_PRIME = 2**31 - 1


class FieldMismatchError(ValueError):
    """Operands live over different prime fields."""


class SingularMatrixError(ValueError):
    """Square matrix has no inverse over its field."""


class GuardExceededError(RuntimeError):
    """An exhaustive computation would exceed its hard work limit."""


class MatrixFormatError(ValueError):
    """Matrix text input is malformed; carries the offending line/column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


def is_prime(n: int) -> bool:
    """Trial-division primality test; fine for moduli up to 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Prime:
    """A validated prime field characteristic."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"field characteristic must be an int, got {type(self.p).__name__}")
        if not 2 <= self.p <= MAX_PRIME:
            raise ValueError(f"field characteristic must lie in [2, {MAX_PRIME}], got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"field characteristic must be prime, got {self.p}")

    def __repr__(self):
        return f"Prime({self.p})"


@dataclass(frozen=True)
class Felt:
    """A field element of GF(p), kept fully reduced."""

    value: int
    prime: Prime

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.prime.p)

    def _coerce(self, other):
        if isinstance(other, Felt):
            if other.prime != self.prime:
                raise FieldMismatchError(
                    f"cannot mix GF({self.prime.p}) and GF({other.prime.p}) elements"
                )
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return Felt(int(other), self.prime)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Felt(self.value + other.value, self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Felt(self.value - other.value, self.prime)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Felt(other.value - self.value, self.prime)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Felt(self.value * other.value, self.prime)

    __rmul__ = __mul__

    def __neg__(self):
        return Felt(-self.value, self.prime)

    def inverse(self) -> "Felt":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return Felt(pow(self.value, -1, self.prime.p), self.prime)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Felt({self.value} mod {self.prime.p})"


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (possibly batched) matrix product mod p.

    Uses the int64 fast path when the accumulated dot products cannot
    overflow; otherwise falls back to Python-int arithmetic.
    """
    inner = a.shape[-1]
    if inner * (p - 1) ** 2 < 2**63:
        return (a @ b) % p
    out = (a.astype(object) @ b.astype(object)) % p
    return out.astype(np.int64)


def _as_reduced(data, p: int, ndim: int) -> np.ndarray:
    arr = np.asarray(data, dtype=np.int64)
    if arr.ndim != ndim:
        raise ValueError(f"expected {ndim}-dimensional data, got ndim={arr.ndim}")
    arr = np.ascontiguousarray(arr % p)
    arr.flags.writeable = False
    return arr


class Vector:
    """Immutable vector over GF(p)."""

    __slots__ = ("prime", "_data")

    def __init__(self, data, prime: Prime):
        self.prime = prime
        self._data = _as_reduced(data, prime.p, 1)
        if len(self._data) > MAX_DIM:
            raise ValueError(f"vector length {len(self._data)} exceeds cap {MAX_DIM}")

    @property
    def array(self) -> np.ndarray:
        return self._data

    def __len__(self):
        return len(self._data)

    def __getitem__(self, i) -> int:
        return int(self._data[i])

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.prime == other.prime and np.array_equal(self._data, other._data)

    def __hash__(self):
        return hash((self.prime, self._data.tobytes()))

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        _check_same_field(self, other)
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        return Vector(self._data + other._data, self.prime)

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        _check_same_field(self, other)
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        return Vector(self._data - other._data, self.prime)

    def weight(self) -> int:
        """Hamming weight: number of nonzero coordinates."""
        return int(np.count_nonzero(self._data))

    def __repr__(self):
        return f"Vector({self._data.tolist()} over GF({self.prime.p}))"


def _check_same_field(a, b):
    if a.prime != b.prime:
        raise FieldMismatchError(f"cannot mix GF({a.prime.p}) and GF({b.prime.p}) operands")


class Matrix:
    """Immutable dense matrix over GF(p).

    Entries are reduced residues held in a read-only int64 array; ``@``
    multiplies, ``+``/``-`` add, ``*`` scales by a field element.
    """

    __slots__ = ("prime", "_data")

    def __init__(self, data, prime: Prime):
        self.prime = prime
        self._data = _as_reduced(data, prime.p, 2)
        rows, cols = self._data.shape
        if not (1 <= rows <= MAX_DIM and 1 <= cols <= MAX_DIM):
            raise ValueError(f"matrix shape must be within 1..{MAX_DIM} per axis, got {rows}x{cols}")

    @classmethod
    def zeros(cls, rows: int, cols: int, prime: Prime) -> "Matrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), prime)

    @classmethod
    def identity(cls, n: int, prime: Prime) -> "Matrix":
        return cls(np.eye(n, dtype=np.int64), prime)

    @property
    def array(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "Matrix":
        return Matrix(self._data.T, self.prime)

    def row(self, i: int) -> Vector:
        return Vector(self._data[i], self.prime)

    def col(self, j: int) -> Vector:
        return Vector(self._data[:, j], self.prime)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return int(self._data[i, j])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_same_field(self, other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix(self._data + other._data, self.prime)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_same_field(self, other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix(self._data - other._data, self.prime)

    def _scalar(self, scalar) -> int:
        if isinstance(scalar, Felt):
            if scalar.prime != self.prime:
                raise FieldMismatchError(
                    f"cannot scale a GF({self.prime.p}) matrix by a GF({scalar.prime.p}) element"
                )
            return scalar.value
        if isinstance(scalar, (int, np.integer)) and not isinstance(scalar, bool):
            return int(scalar) % self.prime.p
        return -1

    def __mul__(self, scalar):
        s = self._scalar(scalar)
        if s < 0:
            return NotImplemented
        return Matrix(self._data * s, self.prime)

    __rmul__ = __mul__

    def __neg__(self):
        return Matrix(-self._data, self.prime)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            _check_same_field(self, other)
            if self.cols != len(other):
                raise ValueError(f"cannot multiply {self.rows}x{self.cols} by length-{len(other)} vector")
            return Vector(matmul_mod(self._data, other.array, self.prime.p), self.prime)
        if isinstance(other, Matrix):
            _check_same_field(self, other)
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            return Matrix(matmul_mod(self._data, other._data, self.prime.p), self.prime)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.prime == other.prime and np.array_equal(self._data, other._data)

    def __hash__(self):
        return hash((self.prime, self.shape, self._data.tobytes()))

    def __repr__(self):
        return f"Matrix(GF({self.prime.p}), {self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join("[" + " ".join(str(int(v)) for v in r) + "]" for r in self._data)


class RrefResult(NamedTuple):
    matrix: "Matrix"
    rank: int
    pivots: tuple[int, ...]


def _rref_array(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """In-place Gauss-Jordan on a writable int64 array; returns (a, pivot cols)."""
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col_vals = a[:, c].copy()
        col_vals[r] = 0
        hit = np.nonzero(col_vals)[0]
        # Entrywise products stay below (p-1)^2 < 2^63, so no overflow here.
        # Mostly-zero pivot columns take the compressed update; dense ones
        # update in place to avoid the gather/scatter copies.
        if hit.size * 2 > rows:
            a -= np.outer(col_vals, a[r])
            a %= p
        elif hit.size:
            a[hit] = (a[hit] - np.outer(col_vals[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Matrix) -> RrefResult:
    """Reduced row-echelon form via Gauss-Jordan elimination.

    The RREF over a field is unique, so this doubles as a canonical form:
    two row spaces are equal iff their RREFs are identical.  Pivot columns
    are returned in strictly increasing order; rank is their count.
    """
    a, pivots = _rref_array(m.array.copy(), m.prime.p)
    return RrefResult(Matrix(a, m.prime), len(pivots), tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> list[Vector]:
    """Deterministic basis of the right null space of ``m``.

    One basis vector per RREF free column, taken in increasing column
    order: the free coordinate is set to 1 and each pivot coordinate
    absorbs the negated RREF entry.  Returns exactly cols - rank(m)
    vectors, each satisfying m @ v == 0.
    """
    R, _, pivots = rref(m)
    p = m.prime.p
    pivot_set = set(pivots)
    ra = R.array
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-ra[r, f]) % p
        basis.append(Vector(v, m.prime))
    return basis


def inverse(m: Matrix) -> Matrix:
    """Inverse over GF(p); raises SingularMatrixError when rank is deficient."""
    if not m.is_square:
        raise ValueError(f"only square matrices have inverses, got {m.rows}x{m.cols}")
    n = m.rows
    aug = np.hstack([m.array, np.eye(n, dtype=np.int64)])
    reduced, pivots = _rref_array(aug, m.prime.p)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrixError("matrix not invertible")
    return Matrix(reduced[:, n:], m.prime)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: block (i, j) equals a[i, j] * b."""
    _check_same_field(a, b)
    return Matrix(np.kron(a.array, b.array) % a.prime.p, a.prime)


def vec(m: Matrix) -> Vector:
    """Column-stacking vectorization: column 1, then column 2, and so on.

    With this convention vec(A X B) == kronecker(B.T, A) @ vec(X).
    """
    return Vector(m.array.flatten(order="F"), m.prime)


def unvec(v: Vector, rows: int, cols: int) -> Matrix:
    """Inverse of :func:`vec`; requires len(v) == rows * cols."""
    if len(v) != rows * cols:
        raise ValueError(f"vector of length {len(v)} cannot fill a {rows}x{cols} matrix")
    return Matrix(v.array.reshape((rows, cols), order="F"), v.prime)


def parse_matrix_text(text: str) -> Matrix:
    """Parse the plain matrix interchange format.

    Line 1 is ``p rows cols``; each of the following ``rows`` lines holds
    ``cols`` whitespace-separated integers in [0, p).  Out-of-range
    entries are rejected rather than silently reduced.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixFormatError("line 1: empty input, expected 'p rows cols' header", line=1)

    header = lines[0].split()
    if len(header) != 3:
        raise MatrixFormatError(
            f"line 1: expected 'p rows cols' header, got {len(header)} fields", line=1
        )
    try:
        p, rows, cols = (int(tok) for tok in header)
    except ValueError:
        raise MatrixFormatError("line 1: header fields must be integers", line=1) from None
    try:
        prime = Prime(p)
    except (TypeError, ValueError) as exc:
        raise MatrixFormatError(f"line 1: {exc}", line=1) from None
    if not (1 <= rows <= MAX_DIM and 1 <= cols <= MAX_DIM):
        raise MatrixFormatError(
            f"line 1: matrix shape must be within 1..{MAX_DIM} per axis, got {rows}x{cols}", line=1
        )
    if len(lines) - 1 != rows:
        raise MatrixFormatError(
            f"line {len(lines)}: expected {rows} data rows, got {len(lines) - 1}",
            line=len(lines),
        )

    data = np.zeros((rows, cols), dtype=np.int64)
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != cols:
            raise MatrixFormatError(
                f"line {i}: expected {cols} entries, got {len(parts)}", line=i
            )
        for j, tok in enumerate(parts, start=1):
            try:
                val = int(tok)
            except ValueError:
                raise MatrixFormatError(
                    f"line {i}, column {j}: '{tok}' is not an integer", line=i, column=j
                ) from None
            if not 0 <= val < p:
                raise MatrixFormatError(
                    f"line {i}, column {j}: entry {val} outside [0, {p})", line=i, column=j
                )
            data[i - 2, j - 1] = val
    return Matrix(data, prime)


def format_matrix_text(m: Matrix) -> str:
    """Serialize to the text format accepted by :func:`parse_matrix_text`."""
    lines = [f"{m.prime.p} {m.rows} {m.cols}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in m.array)
    return "\n".join(lines) + "\n"
