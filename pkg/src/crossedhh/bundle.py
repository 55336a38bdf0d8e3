"""Algebras with a categorical (twisted) group action.

The action is given by automorphisms ``rho[g]`` composing up to inner
automorphisms, ``rho(g) rho(h) = Ad(c[g][h]) rho(gh)`` and
``rho(e) = Ad(c_e)``, where ``Ad(c)(x) = c x c^-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import frobenius, linalg
from .frobenius import AlgebraData
from .groups import FiniteGroup
from .report import Report, to_plain

COCYCLE_ASSOCIATIVE = "cocycle: c(g,h) c(gh,k) = g(c(h,k)) c(g,hk)"
COCYCLE_RIGHT_UNIT = "cocycle: c(g,e) = g(c_e)"
COCYCLE_LEFT_UNIT = "cocycle: c(e,g) = c_e"


class ValidationError(ValueError):
    """Raised when an input is not a twisted Frobenius algebra bundle."""

    def __init__(self, reports):
        self.reports = list(reports)
        failed = [(r.title, c) for r in self.reports for c in r.failures()]
        msg = "; ".join(f"{t}/{c.name} failed (witness {to_plain(c.witness)})" for t, c in failed[:3])
        super().__init__(msg or "validation failed")


@dataclass(eq=False)
class TwistedBundle:
    algebra: AlgebraData
    group: FiniteGroup
    rho: list
    c: list
    c_e: np.ndarray
    name: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        G, n = self.group.order, self.algebra.dim
        if len(self.rho) != G or any(np.shape(r) != (n, n) for r in self.rho):
            raise linalg.DimensionMismatch("rho must hold one n x n matrix per group element")
        if len(self.c) != G or any(len(row) != G for row in self.c):
            raise linalg.DimensionMismatch("c must be indexed by ordered pairs of group elements")
        if any(np.shape(v) != (n,) for row in self.c for v in row) or np.shape(self.c_e) != (n,):
            raise linalg.DimensionMismatch("twisting elements must be algebra vectors")

    @property
    def field(self):
        return self.algebra.field

    def apply(self, g: int, v) -> np.ndarray:
        return self.field.normalize(self.rho[g] @ v)

    @cached_property
    def c_inv(self) -> list:
        A = self.algebra
        return [[frobenius.element_inverse(A, v) for v in row] for row in self.c]

    @cached_property
    def c_e_inv(self) -> np.ndarray:
        return frobenius.element_inverse(self.algebra, self.c_e)

    @cached_property
    def xi(self) -> np.ndarray:
        return frobenius.copairing(self.algebra)

    def ad_matrix(self, a, a_inv=None) -> np.ndarray:
        """Matrix of x -> a x a^-1."""
        A = self.algebra
        if a_inv is None:
            a_inv = frobenius.element_inverse(A, a)
        return A.field.normalize(A.left_matrix(a) @ A.right_matrix(a_inv))

    def validation_reports(self) -> list:
        reps = [frobenius.verify_algebra(self.algebra), verify_invertibility(self)]
        if not reps[-1].ok:
            return reps
        reps += [
            verify_automorphisms(self),
            verify_composition(self),
            verify_cocycle(self),
            verify_trace_invariance(self),
        ]
        if reps[0]["nondegenerate-pairing"].passed:
            reps.append(verify_ginv_identity(self, self.xi))
        return reps

    def validate(self) -> TwistedBundle:
        reps = self.validation_reports()
        if not all(r.ok for r in reps):
            raise ValidationError(reps)
        return self


def apply(B: TwistedBundle, g: int, v) -> np.ndarray:
    return B.apply(g, v)


def verify_invertibility(B: TwistedBundle) -> Report:
    rep = Report("invertibility")
    A = B.algebra
    with rep.timed("c_e invertible") as box:
        if not frobenius.is_invertible(A, B.c_e):
            box["witness"] = {"element": "c_e"}
    with rep.timed("c(g,h) invertible") as box:
        for g, h in itertools.product(B.group.elements, repeat=2):
            if not frobenius.is_invertible(A, B.c[g][h]):
                box["witness"] = {"g": g, "h": h}
                break
    with rep.timed("rho(g) invertible") as box:
        for g in B.group.elements:
            if linalg.rank(B.rho[g]) != A.dim:
                box["witness"] = {"g": g}
                break
    return rep


def verify_automorphisms(B: TwistedBundle) -> Report:
    rep = Report("automorphisms")
    A = B.algebra
    n = A.dim
    with rep.timed("multiplicative") as box:
        for g in B.group.elements:
            r = B.rho[g]
            # lhs[i, j] = g(e_i e_j), rhs[i, j] = g(e_i) g(e_j)
            lhs = B.field.normalize(np.einsum("ijk,lk->ijl", A.mu, r))
            rhs = B.field.normalize(np.einsum("ai,bj,abk->ijk", r, r, A.mu))
            bad = linalg.first_mismatch(lhs, rhs)
            if bad is not None:
                i, j, _ = bad
                box["witness"] = {"g": g, "i": i, "j": j, "lhs": lhs[i, j], "rhs": rhs[i, j]}
                break
    with rep.timed("unital") as box:
        for g in B.group.elements:
            if not linalg.arrays_equal(B.apply(g, A.unit), A.unit):
                box["witness"] = {"g": g}
                break
    with rep.timed("invertible") as box:
        for g in B.group.elements:
            if linalg.rank(B.rho[g]) != n:
                box["witness"] = {"g": g}
                break
    return rep


def verify_composition(B: TwistedBundle) -> Report:
    """rho(g) rho(h) = Ad(c(g,h)) rho(gh) and rho(e) = Ad(c_e), as matrices."""
    rep = Report("composition")
    G = B.group
    n = B.algebra.dim
    with rep.timed("rho(g)rho(h) = Ad(c(g,h))rho(gh)") as box:
        for g, h in itertools.product(G.elements, repeat=2):
            lhs = B.field.normalize(B.rho[g] @ B.rho[h])
            rhs = B.field.normalize(B.ad_matrix(B.c[g][h], B.c_inv[g][h]) @ B.rho[G.mul(g, h)])
            bad = linalg.first_mismatch(lhs, rhs)
            if bad is not None:
                box["witness"] = {"g": g, "h": h, "basis": bad[1]}
                break
    with rep.timed("rho(e) = Ad(c_e)") as box:
        bad = linalg.first_mismatch(B.rho[G.identity], B.ad_matrix(B.c_e, B.c_e_inv))
        if bad is not None:
            box["witness"] = {"basis": bad[1]}
    return rep


def verify_cocycle(B: TwistedBundle) -> Report:
    rep = Report("cocycle")
    G, A = B.group, B.algebra
    e = G.identity
    with rep.timed(COCYCLE_ASSOCIATIVE) as box:
        for g, h, k in itertools.product(G.elements, repeat=3):
            lhs = A.multiply(B.c[g][h], B.c[G.mul(g, h)][k])
            rhs = A.multiply(B.apply(g, B.c[h][k]), B.c[g][G.mul(h, k)])
            if not linalg.arrays_equal(lhs, rhs):
                box["witness"] = {"g": g, "h": h, "k": k, "lhs": lhs, "rhs": rhs}
                break
    with rep.timed(COCYCLE_RIGHT_UNIT) as box:
        for g in G.elements:
            if not linalg.arrays_equal(B.c[g][e], B.apply(g, B.c_e)):
                box["witness"] = {"g": g}
                break
    with rep.timed(COCYCLE_LEFT_UNIT) as box:
        for g in G.elements:
            if not linalg.arrays_equal(B.c[e][g], B.c_e):
                box["witness"] = {"g": g}
                break
    return rep


def verify_trace_invariance(B: TwistedBundle) -> Report:
    rep = Report("trace-invariance")
    with rep.timed("theta(g(c)) = theta(c)") as box:
        for g in B.group.elements:
            bad = linalg.first_mismatch(B.field.normalize(B.algebra.trace @ B.rho[g]), B.algebra.trace)
            if bad is not None:
                box["witness"] = {"g": g, "basis": bad[0]}
                break
    return rep


def verify_ginv_identity(B: TwistedBundle, X: np.ndarray) -> Report:
    """xi' (x) g^-1(xi'') = Ad(c_e^-1) Ad(c(g,g^-1)^-1) g(xi') (x) xi''."""
    rep = Report("ginv")
    G, A = B.group, B.algebra
    with rep.timed("xi' (x) g^-1(xi'') = Ad(w)g(xi') (x) xi''") as box:
        for g in G.elements:
            gi = G.inv(g)
            w = A.multiply(B.c_e_inv, B.c_inv[g][gi])
            w_inv = A.multiply(B.c[g][gi], B.c_e)
            lhs = B.field.normalize(X @ B.rho[gi].T)
            rhs = B.field.normalize(B.ad_matrix(w, w_inv) @ B.rho[g] @ X)
            bad = linalg.first_mismatch(lhs, rhs)
            if bad is not None:
                box["witness"] = {"g": g, "entry": bad}
                break
    return rep


def verify_inverse_consistency(B: TwistedBundle) -> Report:
    """rho(g) rho(g^-1) = Ad(c(g,g^-1) c_e), a consequence of composition and cocycle."""
    rep = Report("inverse-consistency")
    G, A = B.group, B.algebra
    with rep.timed("rho(g)rho(g^-1) = Ad(c(g,g^-1)c_e)") as box:
        for g in G.elements:
            gi = G.inv(g)
            lhs = B.field.normalize(B.rho[g] @ B.rho[gi])
            rhs = B.ad_matrix(A.multiply(B.c[g][gi], B.c_e))
            if not linalg.arrays_equal(lhs, rhs):
                box["witness"] = {"g": g}
                break
    return rep
