"""The graded 0-th Hochschild homology bundle of a twisted algebra.

For each group element h the twisted commutator space is spanned by
``c1 c2 - c2 h(c1)``; the degree-h piece is the quotient of the algebra by
it. Quotients are handled through the canonical (projection, section) pair
of ``linalg.quotient_data``, and the group acts through the maps
``T_h(g)(c) = c_e^-1 c(g,g^-1)^-1 g(c) c(g,h) c(gh,g^-1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .bundle import TwistedBundle
from .linalg import Subspace
from .report import Report


def twisted_commutator_subspace(B: TwistedBundle, h: int) -> Subspace:
    A = B.algebra
    n = A.dim
    # bilinear in (c1, c2), so basis pairs suffice
    gens = []
    for i, j in itertools.product(range(n), repeat=2):
        ei, ej = A.basis(i), A.basis(j)
        gens.append(A.multiply(ei, ej) - A.multiply(ej, B.apply(h, ei)))
    return linalg.span(gens, n, A.field)


def T_map(B: TwistedBundle, g: int, h: int) -> np.ndarray:
    """Matrix of T_h(g) on the ambient algebra."""
    G, A = B.group, B.algebra
    gi = G.inv(g)
    left = A.multiply(B.c_e_inv, B.c_inv[g][gi])
    right = A.multiply(B.c[g][h], B.c[G.mul(g, h)][gi])
    return A.field.normalize(A.left_matrix(left) @ A.right_matrix(right) @ B.rho[g])


@dataclass(eq=False)
class HochschildBundle:
    bundle: TwistedBundle
    subspaces: list
    projections: list
    sections: list
    dims: list
    ambient_T: dict
    induced: dict

    @property
    def group(self):
        return self.bundle.group

    @property
    def field(self):
        return self.bundle.field

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def T(self, g: int, h: int) -> np.ndarray:
        """Induced map HH0_h -> HH0_{g h g^-1}."""
        return self.induced[g, h]

    def lift(self, g: int, x) -> np.ndarray:
        return self.field.normalize(self.sections[g] @ x)

    def project(self, g: int, v) -> np.ndarray:
        return self.field.normalize(self.projections[g] @ v)


def build_hh0(B: TwistedBundle) -> HochschildBundle:
    G = B.group
    subspaces, projections, sections, dims = [], [], [], []
    for g in G.elements:
        s = twisted_commutator_subspace(B, g)
        p, sec, q = linalg.quotient_data(s, B.field)
        subspaces.append(s)
        projections.append(p)
        sections.append(sec)
        dims.append(q)
    ambient_T, induced = {}, {}
    for g, h in itertools.product(G.elements, repeat=2):
        t = T_map(B, g, h)
        ambient_T[g, h] = t
        induced[g, h] = B.field.normalize(projections[G.conj(g, h)] @ t @ sections[h])
    return HochschildBundle(B, subspaces, projections, sections, dims, ambient_T, induced)


def induced_T(HB: HochschildBundle, g: int) -> dict:
    """The block maps T_h(g): HH0_h -> HH0_{g h g^-1}, keyed by h."""
    return {h: HB.induced[g, h] for h in HB.group.elements}


def verify_prop_maps(HB: HochschildBundle) -> Report:
    """T_h(g) carries the h-twisted commutators exactly onto the ghg^-1-twisted ones."""
    rep = Report("T-maps")
    B, G = HB.bundle, HB.group
    n = B.algebra.dim
    with rep.timed("T_h(g)(C_h) = C_ghg^-1") as box:
        for g, h in itertools.product(G.elements, repeat=2):
            t = HB.ambient_T[g, h]
            image = linalg.span([B.field.normalize(t @ v) for v in HB.subspaces[h].basis], n, B.field)
            if image != HB.subspaces[G.conj(g, h)]:
                box["witness"] = {"g": g, "h": h, "image_dim": image.dim, "target_dim": HB.subspaces[G.conj(g, h)].dim}
                break
    with rep.timed("induced map well defined") as box:
        # pi' T = T_induced pi on the whole ambient space, not just on the section
        for g, h in itertools.product(G.elements, repeat=2):
            k = G.conj(g, h)
            lhs = B.field.normalize(HB.projections[k] @ HB.ambient_T[g, h])
            rhs = B.field.normalize(HB.induced[g, h] @ HB.projections[h])
            if not linalg.arrays_equal(lhs, rhs):
                box["witness"] = {"g": g, "h": h}
                break
    return rep


def verify_prop_repr(HB: HochschildBundle) -> Report:
    rep = Report("representation")
    G, F = HB.group, HB.field
    e = G.identity
    with rep.timed("T(g1)T(g2) = T(g1g2)") as box:
        for g1, g2, h in itertools.product(G.elements, repeat=3):
            lhs = F.normalize(HB.induced[g1, G.conj(g2, h)] @ HB.induced[g2, h])
            rhs = HB.induced[G.mul(g1, g2), h]
            if not linalg.arrays_equal(lhs, rhs):
                box["witness"] = {"g1": g1, "g2": g2, "h": h}
                break
    with rep.timed("T(e) = id") as box:
        for h in G.elements:
            if not linalg.arrays_equal(HB.induced[e, h], F.identity(HB.dims[h])):
                box["witness"] = {"h": h}
                break
    with rep.timed("special: T_g(g) = id") as box:
        for g in G.elements:
            if not linalg.arrays_equal(HB.induced[g, g], F.identity(HB.dims[g])):
                box["witness"] = {"g": g}
                break
    return rep
