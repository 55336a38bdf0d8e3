"""Finite-dimensional unital algebras with a trace, and their copairing."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .field import Field
from .report import Report


class NotFrobenius(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


@dataclass(eq=False)
class AlgebraData:
    """Structure constants ``mu[i, j, k]``: e_i e_j = sum_k mu[i, j, k] e_k."""

    field: Field
    mu: np.ndarray
    unit: np.ndarray
    trace: np.ndarray

    def __post_init__(self):
        n = self.dim
        if self.mu.shape != (n, n, n) or self.unit.shape != (n,) or self.trace.shape != (n,):
            raise linalg.DimensionMismatch(
                f"inconsistent shapes mu={self.mu.shape} unit={self.unit.shape} trace={self.trace.shape}"
            )

    @property
    def dim(self) -> int:
        return len(self.unit)

    def basis(self, i: int) -> np.ndarray:
        return self.field.unit_vector(self.dim, i)

    @cached_property
    def _left_basis(self) -> np.ndarray:
        # _left_basis[i] is the matrix of c -> e_i c
        return np.transpose(self.mu, (0, 2, 1))

    @cached_property
    def _right_basis(self) -> np.ndarray:
        # _right_basis[j] is the matrix of c -> c e_j
        return np.transpose(self.mu, (1, 2, 0))

    def _check(self, *vs):
        for v in vs:
            if np.shape(v) != (self.dim,):
                raise linalg.DimensionMismatch(f"expected a vector of length {self.dim}, got shape {np.shape(v)}")

    def multiply(self, a, b) -> np.ndarray:
        self._check(a, b)
        out = self.field.zeros(self.dim)
        # operands are usually sparse; skip zero coefficients of a
        for i, ai in enumerate(a):
            if ai != 0:
                out = out + ai * (b @ self.mu[i])
        return self.field.normalize(out)

    def mul(self, *factors) -> np.ndarray:
        out = factors[0]
        for f in factors[1:]:
            out = self.multiply(out, f)
        return out

    def left_matrix(self, a) -> np.ndarray:
        self._check(a)
        return self.field.normalize(np.tensordot(a, self._left_basis, axes=1))

    def right_matrix(self, b) -> np.ndarray:
        self._check(b)
        return self.field.normalize(np.tensordot(b, self._right_basis, axes=1))

    def theta(self, a):
        self._check(a)
        return self.field(np.dot(self.trace, a))


def multiply(A: AlgebraData, a, b) -> np.ndarray:
    return A.multiply(a, b)


def verify_algebra(A: AlgebraData) -> Report:
    """Associativity, unit laws, trace cyclicity and non-degeneracy of the pairing."""
    rep = Report("algebra")
    n = A.dim
    mu = A.mu
    with rep.timed("associativity") as box:
        # (e_i e_j) e_k vs e_i (e_j e_k), as coefficient tensors
        lhs = np.einsum("ijm,mkl->ijkl", mu, mu)
        rhs = np.einsum("jkm,iml->ijkl", mu, mu)
        bad = linalg.first_mismatch(lhs, rhs)
        if bad is not None:
            i, j, k, l = bad
            box["witness"] = {"triple": (i, j, k), "coefficient": l, "lhs": lhs[bad], "rhs": rhs[bad]}
    ident = A.field.identity(n)
    with rep.timed("unit-left") as box:
        bad = linalg.first_mismatch(A.field.normalize(np.einsum("i,ijk->jk", A.unit, mu)), ident)
        if bad is not None:
            box["witness"] = {"basis": bad[0]}
    with rep.timed("unit-right") as box:
        bad = linalg.first_mismatch(A.field.normalize(np.einsum("j,ijk->ik", A.unit, mu)), ident)
        if bad is not None:
            box["witness"] = {"basis": bad[0]}
    gram = gram_matrix(A)
    with rep.timed("trace-cyclicity") as box:
        bad = linalg.first_mismatch(gram, gram.T)
        if bad is not None:
            box["witness"] = {"pair": bad, "theta(ab)": gram[bad], "theta(ba)": gram.T[bad]}
    with rep.timed("nondegenerate-pairing") as box:
        r = linalg.rank(gram)
        if r != n:
            box["witness"] = {"rank": r, "dim": n}
    return rep


def gram_matrix(A: AlgebraData) -> np.ndarray:
    """M[i, j] = theta(e_i e_j)."""
    return A.field.normalize(np.einsum("ijk,k->ij", A.mu, A.trace))


def copairing(A: AlgebraData) -> np.ndarray:
    """Coefficient matrix X of xi = sum X[a, b] e_a (x) e_b.

    The defining identity c = sum xi' theta(c xi'') forces X M^T = I.
    """
    m = gram_matrix(A)
    try:
        x = linalg.invert(m.T, A.field)
    except linalg.SingularMatrix as exc:
        raise NotFrobenius(f"the trace pairing is degenerate: {exc}") from None
    return x


def copairing_defect(A: AlgebraData, X: np.ndarray):
    """First basis index k where sum X[a,b] e_a theta(e_k e_b) != e_k, else None."""
    m = gram_matrix(A)
    recon = A.field.normalize(X @ m.T)
    bad = linalg.first_mismatch(recon, A.field.identity(A.dim))
    return None if bad is None else bad[1]


def verify_copairing_identities(A: AlgebraData, X: np.ndarray) -> Report:
    """The defining identity, symmetry, and both intertwining identities of xi."""
    rep = Report("copairing")
    n = A.dim
    with rep.timed("defining-identity") as box:
        k = copairing_defect(A, X)
        if k is not None:
            box["witness"] = {"basis": k}
    with rep.timed("symmetric") as box:
        bad = linalg.first_mismatch(X, X.T)
        if bad is not None:
            box["witness"] = {"entry": bad}
    with rep.timed("intertwine-outer") as box:
        # c xi' (x) xi'' = xi' (x) xi'' c
        for k in range(n):
            ek = A.basis(k)
            lhs = A.left_matrix(ek) @ X
            rhs = X @ A.right_matrix(ek).T
            if not linalg.arrays_equal(lhs, rhs):
                box["witness"] = {"basis": k}
                break
    with rep.timed("intertwine-inner") as box:
        # xi' c (x) xi'' = xi' (x) c xi''
        for k in range(n):
            ek = A.basis(k)
            lhs = A.right_matrix(ek) @ X
            rhs = X @ A.left_matrix(ek).T
            if not linalg.arrays_equal(lhs, rhs):
                box["witness"] = {"basis": k}
                break
    return rep


def casimir(A: AlgebraData, X: np.ndarray) -> np.ndarray:
    """z = sum xi'_i xi''_i."""
    return A.field.normalize(np.einsum("ab,abk->k", X, A.mu))


def element_inverse(A: AlgebraData, c) -> np.ndarray:
    try:
        x = linalg.invert(A.left_matrix(c), A.field) @ A.unit
    except linalg.SingularMatrix:
        raise NotInvertible("left multiplication is singular") from None
    x = A.field.normalize(x)
    if not (linalg.arrays_equal(A.multiply(c, x), A.unit) and linalg.arrays_equal(A.multiply(x, c), A.unit)):
        raise NotInvertible("one-sided inverse only")
    return x


def is_invertible(A: AlgebraData, c) -> bool:
    try:
        element_inverse(A, c)
    except NotInvertible:
        return False
    return True
