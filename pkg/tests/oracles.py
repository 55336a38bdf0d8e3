"""Independent brute-force oracles shared by several test modules."""

import itertools
from fractions import Fraction

import numpy as np

from crossedhh import linalg
from crossedhh.bundle import TwistedBundle
from crossedhh.frobenius import AlgebraData


def conjugacy_class_count(G):
    seen, classes = set(), 0
    for x in G.elements:
        if x not in seen:
            classes += 1
            seen |= {G.mul(G.mul(k, x), G.inv(k)) for k in G.elements}
    return classes


def twisted_classes(H, h):
    """Components of the relation ab ~ b (h a h^-1) on group elements.

    For the conjugation bundle on K[H] the generators of C_h are differences of
    two basis vectors, so HH0_h has one dimension per component.
    """
    parent = list(H.elements)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in itertools.product(H.elements, repeat=2):
        x, y = H.mul(a, b), H.mul(b, H.conj(h, a))
        parent[find(x)] = find(y)
    comps = {}
    for x in H.elements:
        comps.setdefault(find(x), []).append(x)
    return list(comps.values())


def group_algebra_character(H, g, h):
    """g permutes the components for h by conjugation; count the fixed ones."""
    comps = twisted_classes(H, h)
    where = {x: i for i, c in enumerate(comps) for x in c}
    return sum(1 for c in comps if where[H.conj(g, c[0])] == where[c[0]])


def fixed_points(action_row):
    return sum(1 for x, y in enumerate(action_row) if x == y)


def mat2_inv(m):
    (a, b), (c, d) = m
    det = Fraction(a * d - b * c)
    return ((d / det, -b / det), (-c / det, a / det))


def mat2_mul(*ms):
    out = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    for m in ms:
        out = tuple(tuple(sum(out[i][k] * m[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    return out


def change_basis(B: TwistedBundle, P) -> TwistedBundle:
    """The same bundle in the basis given by the columns of P."""
    F = B.field
    P = F.matrix(P)
    Pi = linalg.invert(P, F)
    A = B.algebra
    n = A.dim
    mu = F.zeros(n, n, n)
    for i, j in itertools.product(range(n), repeat=2):
        mu[i, j] = F.normalize(Pi @ A.multiply(P[:, i], P[:, j]))
    alg = AlgebraData(F, mu, F.normalize(Pi @ A.unit), F.normalize(A.trace @ P))
    rho = [F.normalize(Pi @ r @ P) for r in B.rho]
    c = [[F.normalize(Pi @ v) for v in row] for row in B.c]
    return TwistedBundle(alg, B.group, rho, c, F.normalize(Pi @ B.c_e))


def random_unimodular(n, rng):
    """A random integer matrix with determinant 1 (product of elementary matrices)."""
    m = np.identity(n, dtype=object)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            m[i] = m[i] + rng.choice([-2, -1, 1, 2]) * m[j]
    return [[int(x) for x in row] for row in m]
