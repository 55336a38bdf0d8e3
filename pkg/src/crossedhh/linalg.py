"""Dense exact linear algebra on numpy object arrays.

Every routine works over whichever exact scalar type the arrays hold
(``Fraction`` or ``Residue``); no floating point is ever introduced.
Subspaces are kept in reduced row-echelon form, so equality of subspaces
is equality of their canonical bases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import RATIONALS, Field, Residue


class SingularMatrix(ArithmeticError):
    pass


class DimensionMismatch(ValueError):
    pass


def infer_field(arr) -> Field:
    """The field of the first residue found in ``arr``; rationals otherwise."""
    for v in np.asarray(arr, dtype=object).flat:
        if isinstance(v, Residue):
            return Field(v.p)
    return RATIONALS


def is_zero(arr) -> bool:
    return all(v == 0 for v in np.asarray(arr, dtype=object).flat)


def arrays_equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def first_mismatch(a, b):
    """Index of the first differing entry, or None when equal."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} vs {b.shape}")
    for idx, x in np.ndenumerate(a):
        if x != b[idx]:
            return idx
    return None


def rref(m: np.ndarray, field: Field | None = None):
    """Reduced row-echelon form of ``m`` and its pivot columns.

    The result has the same shape as ``m``; zero rows sink to the bottom.
    """
    a = np.array(m, dtype=object, copy=True)
    if a.ndim != 2:
        raise DimensionMismatch("rref expects a 2-d array")
    a = (field or infer_field(a)).normalize(a)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] / a[r, c]
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


def invert(m: np.ndarray, field: Field | None = None) -> np.ndarray:
    m = np.asarray(m, dtype=object)
    n, k = m.shape
    if n != k:
        raise DimensionMismatch(f"cannot invert a {n}x{k} matrix")
    if n == 0:
        return np.empty((0, 0), dtype=object)
    field = field or infer_field(m)
    aug = np.empty((n, 2 * n), dtype=object)
    aug[:, :n] = m
    aug[:, n:] = field.identity(n)
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix(f"matrix has rank {sum(p < n for p in pivots)} < {n}")
    return red[:, n:]


def solve(a: np.ndarray, b: np.ndarray):
    """One solution x of ``a @ x = b``, or None if the system is inconsistent."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    rows, cols = a.shape
    aug = np.empty((rows, cols + 1), dtype=object)
    aug[:, :cols] = a
    aug[:, cols] = b
    field = infer_field(aug)
    red, pivots = rref(aug, field)
    if pivots and pivots[-1] == cols:
        return None
    x = field.zeros(cols)
    for r, c in enumerate(pivots):
        x[c] = red[r, cols]
    return x


@dataclass(eq=False)
class Subspace:
    """A subspace of K^n with its canonical RREF basis (one basis vector per row)."""

    ambient_dim: int
    basis: np.ndarray
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __eq__(self, other):
        return subspaces_equal(self, other)

    def contains(self, v) -> bool:
        return subspace_contains(self, v)


def span(vectors, ambient_dim: int, field: Field | None = None) -> Subspace:
    vecs = [np.asarray(v, dtype=object) for v in vectors]
    for v in vecs:
        if v.shape != (ambient_dim,):
            raise DimensionMismatch(f"vector of shape {v.shape} in ambient dimension {ambient_dim}")
    if not vecs:
        return Subspace(ambient_dim, np.empty((0, ambient_dim), dtype=object), ())
    red, pivots = rref(np.vstack(vecs), field)
    return Subspace(ambient_dim, red[: len(pivots)], tuple(pivots))


def subspace_contains(s: Subspace, v) -> bool:
    v = np.array(v, dtype=object, copy=True)
    if v.shape != (s.ambient_dim,):
        raise DimensionMismatch(f"vector of shape {v.shape} vs ambient {s.ambient_dim}")
    for r, c in enumerate(s.pivots):
        if v[c] != 0:
            v = v - v[c] * s.basis[r]
    return is_zero(v)


def subspaces_equal(a: Subspace, b: Subspace) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} vs {b.ambient_dim}")
    return a.pivots == b.pivots and arrays_equal(a.basis, b.basis)


def quotient_data(s: Subspace, field: Field):
    """Projection onto K^n / s and a section of it.

    The quotient is identified with the coordinate subspace at the non-pivot
    columns. Returns ``(projection, section, quot_dim)`` with
    ``projection @ section == I`` and ``projection @ s.basis.T == 0``.
    """
    n = s.ambient_dim
    free = [c for c in range(n) if c not in s.pivots]
    q = len(free)
    section = field.zeros(n, q)
    projection = field.zeros(q, n)
    for j, c in enumerate(free):
        section[c, j] = field.one
        projection[j, c] = field.one
    for r, c in enumerate(s.pivots):
        for j, fc in enumerate(free):
            projection[j, c] = -s.basis[r, fc]
    return projection, section, q
