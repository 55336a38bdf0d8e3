"""Constructors for the standard instance families.

Every builder returns a bundle that has already passed full validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .bundle import COCYCLE_ASSOCIATIVE, COCYCLE_LEFT_UNIT, COCYCLE_RIGHT_UNIT, TwistedBundle, ValidationError
from .field import RATIONALS, Field
from .frobenius import AlgebraData
from .groups import FiniteGroup, cyclic, direct_product, symmetric, trivial


class BuilderError(ValueError):
    pass


class CocycleViolation(BuilderError):
    pass


class NonInvariantVolume(BuilderError):
    pass


class NonInvertibleBeta(BuilderError):
    pass


class SingularProjectiveMatrix(BuilderError):
    pass


class BadCharacteristic(BuilderError):
    pass


def _trivial_cocycle(field: Field, G: FiniteGroup, unit):
    return [[unit.copy() for _ in G.elements] for _ in G.elements]


def group_algebra_bundle(H: FiniteGroup, field: Field = RATIONALS) -> TwistedBundle:
    """K[H] with theta = coefficient of the identity, H acting by conjugation."""
    n = H.order
    mu = field.zeros(n, n, n)
    for a, b in itertools.product(H.elements, repeat=2):
        mu[a, b, H.mul(a, b)] = field.one
    unit = field.unit_vector(n, H.identity)
    A = AlgebraData(field, mu, unit, unit.copy())
    rho = []
    for g in H.elements:
        r = field.zeros(n, n)
        for h in H.elements:
            r[H.conj(g, h), h] = field.one
        rho.append(r)
    B = TwistedBundle(A, H, rho, _trivial_cocycle(field, H, unit), unit.copy(), name="group-algebra")
    return B.validate()


def function_algebra_bundle(G: FiniteGroup, action, volume, beta=None, field: Field = RATIONALS) -> TwistedBundle:
    """Functions on a finite G-set with a B-field.

    ``action[g][x]`` is the image of point x under g; ``volume[x]`` the trace
    weight of point x; ``beta[g][h]`` a per-point list of values of the
    twisting function c(g,h) (trivial when omitted).
    """
    npts = len(volume)
    act = [list(row) for row in action]
    if len(act) != G.order or any(len(r) != npts for r in act):
        raise BuilderError("action table must have one row of length |X| per group element")
    for x in range(npts):
        if act[G.identity][x] != x:
            raise BuilderError(f"identity moves point {x}")
    for g, h, x in itertools.product(G.elements, G.elements, range(npts)):
        if act[G.mul(g, h)][x] != act[g][act[h][x]]:
            raise BuilderError(f"not an action at (g={g}, h={h}, x={x})")

    vol = field.vector(volume)
    for g, x in itertools.product(G.elements, range(npts)):
        if vol[act[g][x]] != vol[x]:
            raise NonInvariantVolume(f"volume differs between x={x} and g.x with g={g}")
    if any(v == 0 for v in vol):
        raise BuilderError("volume must be nonzero at every point")

    mu = field.zeros(npts, npts, npts)
    for x in range(npts):
        mu[x, x, x] = field.one
    unit = field.vector([1] * npts)
    A = AlgebraData(field, mu, unit, vol)

    rho = []
    for g in G.elements:
        # (g.f)(x) = f(g^-1 x), so delta_x goes to delta_{g x}
        r = field.zeros(npts, npts)
        for x in range(npts):
            r[act[g][x], x] = field.one
        rho.append(r)

    if beta is None:
        c = _trivial_cocycle(field, G, unit)
    else:
        c = [[field.vector(beta[g][h]) for h in G.elements] for g in G.elements]
    for g, h in itertools.product(G.elements, repeat=2):
        if any(v == 0 for v in c[g][h]):
            raise NonInvertibleBeta(f"beta({g},{h}) vanishes at some point")
    c_e = c[G.identity][G.identity].copy()

    B = TwistedBundle(A, G, rho, c, c_e, name="function-algebra")
    try:
        return B.validate()
    except ValidationError as exc:
        for rep in exc.reports:
            for chk in rep.failures():
                if chk.name in (COCYCLE_ASSOCIATIVE, COCYCLE_LEFT_UNIT, COCYCLE_RIGHT_UNIT):
                    raise CocycleViolation(f"{chk.name} fails at {chk.witness}") from None
        raise


def klein_sign_cocycle(G: FiniteGroup):
    """The bilinear +-1 cocycle (-1)^(j1 i2) on Z/2 x Z/2 with index 2 i + j."""

    def bits(g):
        return g // 2, g % 2

    out = []
    for g in G.elements:
        row = []
        for h in G.elements:
            (_, j1), (i2, _) = bits(g), bits(h)
            row.append(-1 if j1 * i2 else 1)
        out.append(row)
    return out


def matrix_unit_algebra(k: int, field: Field) -> AlgebraData:
    """M_k(K) with basis E_ij at index i*k + j and theta = matrix trace."""
    n = k * k
    mu = field.zeros(n, n, n)
    for i, j, l in itertools.product(range(k), repeat=3):
        mu[i * k + j, j * k + l, i * k + l] = field.one
    unit = field.zeros(n)
    trace = field.zeros(n)
    for i in range(k):
        unit[i * k + i] = field.one
        trace[i * k + i] = field.one
    return AlgebraData(field, mu, unit, trace)


def _vec(mat: np.ndarray) -> np.ndarray:
    return mat.reshape(-1).copy()


def matrix_projective_bundle(G: FiniteGroup, P, field: Field = RATIONALS) -> TwistedBundle:
    """M_k(K) with rho(g) = Ad(P(g)), c(g,h) = P(g)P(h)P(gh)^-1, c_e = P(e)."""
    mats = [field.matrix(p) for p in P]
    if len(mats) != G.order:
        raise BuilderError("need one matrix per group element")
    k = mats[0].shape[0]
    invs = []
    for g, p in enumerate(mats):
        try:
            invs.append(linalg.invert(p, field))
        except linalg.SingularMatrix:
            raise SingularProjectiveMatrix(f"P({g}) is singular") from None
    A = matrix_unit_algebra(k, field)
    rho = []
    for g in G.elements:
        r = field.zeros(k * k, k * k)
        for i, j in itertools.product(range(k), repeat=2):
            e = field.zeros(k, k)
            e[i, j] = field.one
            r[:, i * k + j] = _vec(field.normalize(mats[g] @ e @ invs[g]))
        rho.append(r)
    c = [
        [_vec(field.normalize(mats[g] @ mats[h] @ invs[G.mul(g, h)])) for h in G.elements]
        for g in G.elements
    ]
    B = TwistedBundle(A, G, rho, c, _vec(mats[G.identity]), name="projective-matrix")
    return B.validate()


def klein_projective_matrices():
    """P(e)=I, P(b)=diag(1,-1), P(a)=[[0,1],[1,0]], P(ab)=P(a)P(b), in direct-product order.

    Indices: 0=e, 1=b=(0,1), 2=a=(1,0), 3=ab=(1,1). Then c(b,a) = -I.
    """
    e = [[1, 0], [0, 1]]
    b = [[1, 0], [0, -1]]
    a = [[0, 1], [1, 0]]
    ab = [[0, -1], [1, 0]]
    return [e, b, a, ab]


def truncated_polynomial_bundle(sign_action: bool = True, field: Field = RATIONALS) -> TwistedBundle:
    """K[x]/(x^3), theta = coefficient of x^2, Z/2 acting by x -> -x (or trivially)."""
    if sign_action and field.characteristic == 2:
        raise BadCharacteristic("the sign action is trivial in characteristic 2")
    n = 3
    mu = field.zeros(n, n, n)
    for i, j in itertools.product(range(n), repeat=2):
        if i + j < n:
            mu[i, j, i + j] = field.one
    unit = field.unit_vector(n, 0)
    A = AlgebraData(field, mu, unit, field.unit_vector(n, 2))
    G = cyclic(2)
    s = field.identity(n)
    if sign_action:
        s[1, 1] = -field.one
    rho = [field.identity(n), s]
    name = "truncated-polynomial" + ("-sign" if sign_action else "-trivial")
    B = TwistedBundle(A, G, rho, _trivial_cocycle(field, G, unit), unit.copy(), name=name)
    return B.validate()


def klein() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2))


@dataclass(frozen=True)
class BuilderSpec:
    key: str
    family: str
    description: str
    make: object


def _fa_point(twisted):
    def make(field):
        G = klein()
        beta = None
        if twisted:
            beta = [[[v] for v in row] for row in klein_sign_cocycle(G)]
        return function_algebra_bundle(G, [[0]] * 4, [1], beta, field)

    return make


def _fa_swap(field):
    return function_algebra_bundle(cyclic(2), [[0, 1], [1, 0]], [1, 1], None, field)


def _fa_klein_two_points(field):
    G = klein()
    # a = index 2 swaps the points, b = index 1 fixes them
    action = [[0, 1], [0, 1], [1, 0], [1, 0]]
    beta = [[[v, v] for v in row] for row in klein_sign_cocycle(G)]
    return function_algebra_bundle(G, action, [1, 1], beta, field)


SHIPPED = [
    BuilderSpec("trivial-k", "group-algebra", "K over the trivial group", lambda f: group_algebra_bundle(trivial(), f)),
    BuilderSpec("ga-z2", "group-algebra", "K[Z/2] with conjugation", lambda f: group_algebra_bundle(cyclic(2), f)),
    BuilderSpec("ga-z3", "group-algebra", "K[Z/3] with conjugation", lambda f: group_algebra_bundle(cyclic(3), f)),
    BuilderSpec("ga-s3", "group-algebra", "K[S3] with conjugation", lambda f: group_algebra_bundle(symmetric(3), f)),
    BuilderSpec("fa-z2-swap", "function-algebra", "Z/2 swapping two points, trivial B-field", _fa_swap),
    BuilderSpec("fa-klein-point-trivial", "function-algebra", "Z/2xZ/2 on a point, trivial B-field", _fa_point(False)),
    BuilderSpec("fa-klein-point-twisted", "function-algebra", "Z/2xZ/2 on a point, sign B-field", _fa_point(True)),
    BuilderSpec("fa-klein-two-points-twisted", "function-algebra", "Z/2xZ/2 on two points, sign B-field", _fa_klein_two_points),
    BuilderSpec(
        "proj-m2-klein",
        "projective-matrix",
        "M_2 with the Pauli projective action of Z/2xZ/2",
        lambda f: matrix_projective_bundle(klein(), klein_projective_matrices(), f),
    ),
    BuilderSpec("trunc-sign", "truncated-polynomial", "K[x]/(x^3) with x -> -x", lambda f: truncated_polynomial_bundle(True, f)),
    BuilderSpec("trunc-trivial", "truncated-polynomial", "K[x]/(x^3), trivial action", lambda f: truncated_polynomial_bundle(False, f)),
]


def shipped(key: str, field: Field = RATIONALS) -> TwistedBundle:
    for spec in SHIPPED:
        if spec.key == key:
            B = spec.make(field)
            B.name = key
            return B
    raise KeyError(f"unknown shipped instance {key!r}; choose from {[s.key for s in SHIPPED]}")


def shipped_instances(field: Field = RATIONALS) -> dict:
    return {spec.key: shipped(spec.key, field) for spec in SHIPPED}
