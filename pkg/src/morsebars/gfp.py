"""Exact dense linear algebra over prime fields GF(p).

Everything downstream (homology, invariant maps, box modules) reduces to a
small calculus on subspaces of a fixed coordinate space: kernels, images,
sums, intersections and quotient dimensions.  Subspaces are kept in reduced
column-echelon form so that equality of subspaces is structural equality of
their stored bases, and every operation is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_CHARACTERISTIC = 1 << 16


class ContainmentError(ValueError):
    """Raised when a quotient U/W is requested but W is not inside U.

    ``witness`` holds a column of W that lies outside U.
    """

    def __init__(self, message: str, witness: np.ndarray):
        super().__init__(message)
        self.witness = witness


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def _inverse_table(p: int) -> np.ndarray:
    # index 0 is a filler; 0 has no inverse
    table = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    table.flags.writeable = False
    return table


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field GF(char); char must be prime and < 2^16."""

    char: int

    def __post_init__(self):
        if not isinstance(self.char, int) or not _is_prime(self.char):
            raise ValueError(f"field characteristic must be prime, got {self.char!r}")
        if self.char >= MAX_CHARACTERISTIC:
            raise ValueError(f"field characteristic must be < {MAX_CHARACTERISTIC}")

    @property
    def inverses(self) -> np.ndarray:
        return _inverse_table(self.char)


class Mat:
    """Immutable dense matrix over GF(p), entries stored reduced mod p."""

    __slots__ = ("field", "entries")

    def __init__(self, entries, field: FieldSpec):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix entries must be two-dimensional, got shape {arr.shape}")
        arr %= field.char
        arr.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Mat is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "Mat":
        return cls(np.zeros((rows, cols), dtype=np.int64), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Mat":
        return cls(np.eye(n, dtype=np.int64), field)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def transpose(self) -> "Mat":
        return Mat(self.entries.T, self.field)

    def hstack(self, other: "Mat") -> "Mat":
        if other.rows != self.rows or other.field != self.field:
            raise ValueError("hstack requires equal row counts and fields")
        return Mat(np.hstack([self.entries, other.entries]), self.field)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.field != other.field:
            raise ValueError("field mismatch in matrix product")
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return Mat(self.entries @ other.entries, self.field)

    def __neg__(self) -> "Mat":
        return Mat((-self.entries) % self.field.char, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __repr__(self) -> str:
        return f"Mat({self.entries.tolist()}, GF({self.field.char}))"


def _rref(arr: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(p); returns (matrix, pivot columns)."""
    a = arr.copy() % p
    inv = _inverse_table(p)
    rows, cols = a.shape
    pivots: list[int] = []
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
        a[r] = (a[r] * inv[a[r, c]]) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def mat_rank(m: Mat) -> int:
    _, pivots = _rref(m.entries, m.field.char)
    return len(pivots)


class Subspace:
    """A subspace of GF(p)^ambient_dim, basis in reduced column-echelon form.

    Columns of ``basis`` are linearly independent with strictly increasing
    pivot rows, each pivot entry is 1, and pivot rows vanish in all other
    columns.  The form is canonical, so two Subspace values are equal exactly
    when they describe the same subspace.
    """

    __slots__ = ("ambient_dim", "basis", "pivot_rows")

    def __init__(self, ambient_dim: int, basis: Mat, pivot_rows: tuple[int, ...]):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivot_rows", pivot_rows)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def spanned_by(cls, m: Mat) -> "Subspace":
        """Canonicalize the column span of ``m``."""
        reduced, pivots = _rref(m.entries.T, m.field.char)
        basis = Mat(reduced[: len(pivots)].T, m.field)
        return cls(m.rows, basis, tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int, field: FieldSpec) -> "Subspace":
        return cls(ambient_dim, Mat.zeros(ambient_dim, 0, field), ())

    @classmethod
    def full(cls, ambient_dim: int, field: FieldSpec) -> "Subspace":
        return cls(ambient_dim, Mat.identity(ambient_dim, field), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    def reduce_columns(self, vecs: np.ndarray) -> np.ndarray:
        """Residual of the columns of ``vecs`` after reduction against the basis.

        A column reduces to zero exactly when it lies in the subspace.
        """
        p = self.field.char
        res = vecs.copy() % p
        basis = self.basis.entries
        for j, pr in enumerate(self.pivot_rows):
            coeff = res[pr, :].copy()
            res = (res - np.outer(basis[:, j], coeff)) % p
        return res

    def contains_columns(self, vecs: np.ndarray) -> bool:
        return not self.reduce_columns(vecs).any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, GF({self.field.char}))"


def kernel_basis(m: Mat) -> Subspace:
    """Null space of ``m`` as a subspace of the domain GF(p)^cols."""
    p = m.field.char
    reduced, pivots = _rref(m.entries, p)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    vecs = np.zeros((m.cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        vecs[f, k] = 1
        for i, pc in enumerate(pivots):
            vecs[pc, k] = (-reduced[i, f]) % p
    return Subspace.spanned_by(Mat(vecs.reshape(m.cols, len(free)), m.field))


def _check_ambient(u: Subspace, v: Subspace):
    if u.ambient_dim != v.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {u.ambient_dim} != {v.ambient_dim}")
    if u.field != v.field:
        raise ValueError("field mismatch between subspaces")


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace.spanned_by(u.basis.hstack(v.basis))


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """U ∩ V via the kernel of the concatenated basis matrix [U | -V]."""
    _check_ambient(u, v)
    stacked = u.basis.hstack(-v.basis)
    ker = kernel_basis(stacked)
    coeffs = ker.basis.entries[: u.dim, :]
    vectors = Mat(u.basis.entries @ coeffs, u.field)
    return Subspace.spanned_by(vectors)


def subspace_image(m: Mat, u: Subspace) -> Subspace:
    if m.cols != u.ambient_dim:
        raise ValueError(f"dimension mismatch: map expects {m.cols}, subspace lives in {u.ambient_dim}")
    return Subspace.spanned_by(m @ u.basis)


def quotient_dim(u: Subspace, w: Subspace) -> int:
    """dim U/W; raises ContainmentError (with a witness column) if W ⊄ U."""
    _check_ambient(u, w)
    residual = u.reduce_columns(w.basis.entries)
    bad = np.nonzero(residual.any(axis=0))[0]
    if bad.size:
        j = int(bad[0])
        raise ContainmentError(
            f"quotient undefined: basis column {j} of W lies outside U",
            witness=w.basis.entries[:, j].copy(),
        )
    return u.dim - w.dim


def complement_in(u: Subspace, w: Subspace) -> Mat:
    """Columns of U's basis completing W to a basis of U (representatives of U/W)."""
    _check_ambient(u, w)
    p = u.field.char
    span = w
    picked = []
    for j in range(u.dim):
        col = u.basis.entries[:, j : j + 1]
        if span.reduce_columns(col).any():
            picked.append(j)
            span = subspace_sum(span, Subspace.spanned_by(Mat(col, u.field)))
    if not picked:
        return Mat.zeros(u.ambient_dim, 0, u.field)
    return Mat(u.basis.entries[:, picked] % p, u.field)


def solve(a: Mat, b: Mat) -> Mat:
    """One solution X of A·X = B with free variables set to zero.

    Raises ValueError when some column of B is outside the column space of A.
    """
    if a.rows != b.rows or a.field != b.field:
        raise ValueError("solve requires matching row counts and fields")
    p = a.field.char
    inv = _inverse_table(p)
    aug = np.hstack([a.entries, b.entries]).copy()
    rows = aug.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        if r == rows:
            break
        nz = np.nonzero(aug[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            aug[[r, pr]] = aug[[pr, r]]
        aug[r] = (aug[r] * inv[aug[r, c]]) % p
        col = aug[:, c].copy()
        col[r] = 0
        aug = (aug - np.outer(col, aug[r])) % p
        pivots.append(c)
        r += 1
    if aug[r:, a.cols :].any():
        raise ValueError("inconsistent linear system")
    x = np.zeros((a.cols, b.cols), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc, :] = aug[i, a.cols :]
    return Mat(x, a.field)
