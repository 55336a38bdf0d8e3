"""Weak crossed G-algebra structure on the Hochschild homology bundle.

Graded maps are computed on ambient representatives and then projected:

* product    m_{g,h}(a (x) b) = sum xi'_i a g(xi''_i b) c(g,h)
* coproduct  D_{g,h}(c)       = sum c c(g,h)^-1 g(xi'_i) (x) xi''_i
* counit     theta_e(c)       = theta(c c_e)

Tensor layouts (quotient coordinates):

* ``m[g, h]``     has shape (d_g, d_h, d_gh); ``m[g, h][i, j]`` is the product of basis i and j.
* ``delta[g, h]`` has shape (d_gh, d_g, d_h); ``delta[g, h][t]`` is the coproduct of basis t.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import frobenius, linalg
from .hochschild import HochschildBundle
from .report import Report

AxiomReport = Report


class GradeMismatch(ValueError):
    pass


def _ambient_product_tensor(HB: HochschildBundle, X, g, h):
    """P[i, j] = m_{g,h}(e_i (x) e_j) in the ambient algebra."""
    B = HB.bundle
    A = B.algebra
    mu = A.mu
    # E2[q, j] = g(e_q e_j)
    E2 = np.tensordot(mu, B.rho[g], axes=([2], [1]))
    Y = np.tensordot(X, E2, axes=([1], [0]))  # Y[p, j, b] = sum_q X[p,q] E2[q,j,b]
    # Z[i, a, j, b] = sum_p (e_p e_i)_a Y[p, j, b]
    Z = np.tensordot(mu, Y, axes=([0], [0]))
    W = np.tensordot(Z, mu, axes=([1, 3], [0, 1]))  # W[i, j, k]
    Rc = A.right_matrix(B.c[g][h])
    return A.field.normalize(np.tensordot(W, Rc, axes=([2], [1])))


def _ambient_coproduct_tensor(HB: HochschildBundle, X, g, h):
    """D[t] = coefficient matrix of D_{g,h}(e_t) in the ambient tensor square."""
    B = HB.bundle
    A = B.algebra
    w = B.c_inv[g][h]
    gx = B.rho[g] @ X
    out = np.empty((A.dim, A.dim, A.dim), dtype=object)
    for t in range(A.dim):
        out[t] = A.left_matrix(A.multiply(A.basis(t), w)) @ gx
    return A.field.normalize(out)


@dataclass(eq=False)
class CrossedAlgebra:
    hh: HochschildBundle
    xi: np.ndarray
    m: dict
    delta: dict
    counit_vector: np.ndarray
    _ambient_m: dict = field(default_factory=dict, repr=False)
    _ambient_delta: dict = field(default_factory=dict, repr=False)

    @property
    def group(self):
        return self.hh.group

    @property
    def field(self):
        return self.hh.field

    @property
    def dims(self):
        return self.hh.dims

    def _grade_check(self, g, x):
        if np.shape(x) != (self.dims[g],):
            raise GradeMismatch(f"vector of shape {np.shape(x)} is not in HH0_{g} (dim {self.dims[g]})")

    def product(self, g, h, x, y) -> np.ndarray:
        self._grade_check(g, x)
        self._grade_check(h, y)
        return self.field.normalize(np.einsum("i,j,ijk->k", x, y, self.m[g, h]))

    def coproduct(self, g, h, z) -> np.ndarray:
        self._grade_check(self.group.mul(g, h), z)
        return self.field.normalize(np.einsum("t,tab->ab", z, self.delta[g, h]))

    def counit(self, x):
        self._grade_check(self.group.identity, x)
        return self.field(np.dot(self.counit_vector, x))

    def ambient_product(self, g, h, a, b) -> np.ndarray:
        """m_{g,h} on arbitrary ambient elements, before projection."""
        return self.field.normalize(np.einsum("i,j,ijk->k", a, b, self._ambient_m[g, h]))

    def ambient_coproduct(self, g, h, c) -> np.ndarray:
        return self.field.normalize(np.einsum("t,tab->ab", c, self._ambient_delta[g, h]))


def build_crossed(HB: HochschildBundle, xi=None) -> CrossedAlgebra:
    """Assemble the graded structure; ``xi`` overrides the copairing (negative testing)."""
    B = HB.bundle
    G, A, F = B.group, B.algebra, B.field
    X = B.xi if xi is None else F.normalize(np.asarray(xi, dtype=object))
    P, S = HB.projections, HB.sections
    m, delta, amb_m, amb_d = {}, {}, {}, {}
    for g, h in itertools.product(G.elements, repeat=2):
        gh = G.mul(g, h)
        amb_m[g, h] = _ambient_product_tensor(HB, X, g, h)
        proj = np.tensordot(amb_m[g, h], P[gh], axes=([2], [1]))
        m[g, h] = F.normalize(np.einsum("ia,jb,ijk->abk", S[g], S[h], proj))
        amb_d[g, h] = _ambient_coproduct_tensor(HB, X, g, h)
        both = np.einsum("ap,tpq,bq->tab", P[g], amb_d[g, h], P[h])
        delta[g, h] = F.normalize(np.einsum("tc,tab->cab", S[gh], both))
    e = G.identity
    counit_vector = F.normalize(A.trace @ A.right_matrix(B.c_e) @ S[e])
    return CrossedAlgebra(HB, X, m, delta, counit_vector, amb_m, amb_d)


def product(CA: CrossedAlgebra, g, h, x, y):
    return CA.product(g, h, x, y)


def coproduct(CA: CrossedAlgebra, g, h, z):
    return CA.coproduct(g, h, z)


def counit(CA: CrossedAlgebra, x):
    return CA.counit(x)


def torus_axiom_trace(CA: CrossedAlgebra, g, h, c):
    """Both sides of the torus axiom for c in HH0 of degree h g h^-1 g^-1.

    Returns (Tr over HH0_h of L'_c . g, Tr over HH0_g of h^-1 . L''_c), where
    L'_c, L''_c are left multiplication by c into degrees h and h g h^-1.
    """
    G, T = CA.group, CA.hh.induced
    k = G.prod(h, g, G.inv(h), G.inv(g))
    CA._grade_check(k, c)
    left_1 = np.einsum("t,tal->la", c, CA.m[k, G.conj(g, h)])  # HH0_ghg^-1 -> HH0_h
    left_2 = np.einsum("t,tal->la", c, CA.m[k, g])  # HH0_g -> HH0_hgh^-1
    hi = G.inv(h)
    lhs = np.trace(left_1 @ T[g, h]) if CA.dims[h] else 0
    rhs = np.trace(T[hi, G.conj(h, g)] @ left_2) if CA.dims[g] else 0
    return CA.field(lhs), CA.field(rhs)


def newta_sides(CA: CrossedAlgebra, g, h, c):
    """Both sides of the counit reformulation of the torus axiom."""
    G, T, m = CA.group, CA.hh.induced, CA.m
    gi, hi = G.inv(g), G.inv(h)
    u = G.prod(g, hi, gi)
    D = CA.coproduct(h, u, c) @ T[gi, u].T
    lhs = CA.counit(np.einsum("ab,abk->k", D, m[h, hi]))
    hgh = G.conj(h, g)
    D2 = CA.coproduct(hgh, gi, c) @ T[h, gi].T
    rhs = CA.counit(np.einsum("ab,abk->k", D2, m[hgh, G.conj(h, gi)]))
    return lhs, rhs


def _tensor_check(box, lhs, rhs, witness):
    bad = linalg.first_mismatch(lhs, rhs)
    if bad is None:
        return False
    box["witness"] = dict(witness, index=bad, lhs=lhs[bad], rhs=rhs[bad])
    return True


def verify_weak_crossed(CA: CrossedAlgebra) -> AxiomReport:
    rep = Report("weak crossed G-algebra")
    G, F = CA.group, CA.field
    T, m, delta, d = CA.hh.induced, CA.m, CA.delta, CA.dims
    P = CA.hh.projections
    e = G.identity
    els = list(G.elements)
    n = CA.hh.bundle.algebra.dim

    rep.add("(2) product is graded", True, detail="structural")
    rep.add("(6) coproduct is graded", True, detail="structural")

    with rep.timed("product well defined") as box:
        for g, h in itertools.product(els, repeat=2):
            gh = G.mul(g, h)
            lhs = F.normalize(np.tensordot(CA._ambient_m[g, h], P[gh], axes=([2], [1])))
            rhs = np.einsum("ai,bj,abk->ijk", P[g], P[h], m[g, h])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h}):
                break
    with rep.timed("coproduct well defined") as box:
        for g, h in itertools.product(els, repeat=2):
            gh = G.mul(g, h)
            lhs = np.einsum("ap,tpq,bq->tab", P[g], CA._ambient_delta[g, h], P[h])
            rhs = np.einsum("ct,cab->tab", P[gh], delta[g, h])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h}):
                break
    with rep.timed("counit well defined") as box:
        B = CA.hh.bundle
        lhs = F.normalize(B.algebra.trace @ B.algebra.right_matrix(B.c_e))
        rhs = CA.counit_vector @ P[e] if d[e] else F.zeros(n)
        _tensor_check(box, lhs, np.asarray(rhs, dtype=object), {})

    with rep.timed("(inv) counit is G-invariant") as box:
        for g in els:
            lhs = CA.counit_vector @ T[g, e] if d[e] else CA.counit_vector
            if _tensor_check(box, np.asarray(lhs, dtype=object), CA.counit_vector, {"g": g}):
                break

    with rep.timed("associativity") as box:
        for g, h, k in itertools.product(els, repeat=3):
            lhs = np.einsum("ijq,qkl->ijkl", m[g, h], m[G.mul(g, h), k])
            rhs = np.einsum("jkq,iql->ijkl", m[h, k], m[g, G.mul(h, k)])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h, "k": k}):
                break
    with rep.timed("coassociativity") as box:
        for g, h, k in itertools.product(els, repeat=3):
            lhs = np.einsum("tqc,qab->tabc", delta[G.mul(g, h), k], delta[g, h])
            rhs = np.einsum("taq,qbc->tabc", delta[g, G.mul(h, k)], delta[h, k])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h, "k": k}):
                break

    with rep.timed("(1) G acts by algebra automorphisms") as box:
        for g, h, k in itertools.product(els, repeat=3):
            lhs = np.einsum("ijk,lk->ijl", m[h, k], T[g, G.mul(h, k)])
            rhs = np.einsum("ai,bj,abl->ijl", T[g, h], T[g, k], m[G.conj(g, h), G.conj(g, k)])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h, "k": k}):
                break
    with rep.timed("(3) twisted commutativity") as box:
        for g, h in itertools.product(els, repeat=2):
            lhs = m[g, h]
            rhs = np.einsum("aj,ail->ijl", T[g, h], m[G.conj(g, h), g])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h}):
                break

    trace_form, newta_form, agree = [], [], []
    for g, h in itertools.product(els, repeat=2):
        k = G.prod(h, g, G.inv(h), G.inv(g))
        for t in range(d[k]):
            c = F.unit_vector(d[k], t)
            a, b = torus_axiom_trace(CA, g, h, c)
            x, y = newta_sides(CA, g, h, c)
            w = {"g": g, "h": h, "basis": t}
            if a != b:
                trace_form.append(dict(w, lhs=a, rhs=b))
            if x != y:
                newta_form.append(dict(w, lhs=x, rhs=y))
            if (a == b) != (x == y):
                agree.append(w)
    rep.add("(4) torus axiom, trace form", not trace_form, trace_form[0] if trace_form else None)
    rep.add("(4') torus axiom, counit form", not newta_form, newta_form[0] if newta_form else None)
    rep.add("torus forms agree", not agree, agree[0] if agree else None)

    with rep.timed("(5) G acts by coalgebra automorphisms") as box:
        for g, h, k in itertools.product(els, repeat=3):
            lhs = np.einsum("qt,qab->tab", T[g, G.mul(h, k)], delta[G.conj(g, h), G.conj(g, k)])
            rhs = np.einsum("ai,tij,bj->tab", T[g, h], delta[h, k], T[g, k])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h, "k": k}):
                break
    with rep.timed("(7) D_{g,h} = s(1 x h)D_{h,h^-1gh}") as box:
        for g, h in itertools.product(els, repeat=2):
            u = G.conj(G.inv(h), g)
            lhs = delta[g, h]
            rhs = np.einsum("ab,tcb->tac", T[h, u], delta[h, u])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h}):
                break
    with rep.timed("(8) counit laws") as box:
        for g in els:
            ident = F.identity(d[g])
            left = np.einsum("a,tab->tb", CA.counit_vector, delta[e, g])
            right = np.einsum("b,tab->ta", CA.counit_vector, delta[g, e])
            if _tensor_check(box, left, ident, {"g": g, "side": "(theta x 1)D_{e,g}"}):
                break
            if _tensor_check(box, right, ident, {"g": g, "side": "(1 x theta)D_{g,e}"}):
                break
    with rep.timed("(9) left module map") as box:
        for g, h, k in itertools.product(els, repeat=3):
            lhs = np.einsum("ijq,qab->ijab", m[g, G.mul(h, k)], delta[G.mul(g, h), k])
            rhs = np.einsum("jpb,ipa->ijab", delta[h, k], m[g, h])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h, "k": k}):
                break
    with rep.timed("(9) right module map") as box:
        for g, h, k in itertools.product(els, repeat=3):
            lhs = np.einsum("jiq,qab->jiab", m[G.mul(h, k), g], delta[h, G.mul(k, g)])
            rhs = np.einsum("jap,pib->jiab", delta[h, k], m[k, g])
            if _tensor_check(box, lhs, rhs, {"g": g, "h": h, "k": k}):
                break
    return rep


@dataclass
class SeparabilityResult:
    unit: np.ndarray | None
    honest: bool
    casimir: np.ndarray
    report: Report
    diagnostic: str = ""


def _unit_search(CA: CrossedAlgebra):
    """Solve directly for u in HH0_e with u.c = c = c.u on every graded piece."""
    G, F, m, d = CA.group, CA.field, CA.m, CA.dims
    e = G.identity
    rows, rhs = [], []
    for g in G.elements:
        ident = F.identity(d[g])
        for b, k in itertools.product(range(d[g]), repeat=2):
            rows.append(m[e, g][:, b, k])
            rhs.append(ident[b, k])
            rows.append(m[g, e][b, :, k])
            rhs.append(ident[b, k])
    if not rows:
        return F.zeros(d[e])
    return linalg.solve(np.vstack(rows), F.vector(rhs))


def separability_unit(CA: CrossedAlgebra) -> SeparabilityResult:
    """Unit (z c_e)^-1 when the Casimir z = sum xi' xi'' makes z c_e invertible."""
    B = CA.hh.bundle
    A, G, F = B.algebra, CA.group, CA.field
    e = G.identity
    rep = Report("separability")
    z = frobenius.casimir(A, CA.xi)
    zc = A.multiply(z, B.c_e)
    try:
        unit_amb = frobenius.element_inverse(A, zc)
    except frobenius.NotInvertible:
        unit_amb = None
    searched = _unit_search(CA)
    rep.add(
        "unit search agrees with z criterion",
        (searched is None) == (unit_amb is None),
        None if (searched is None) == (unit_amb is None) else {"searched": searched, "z_invertible": unit_amb is not None},
    )
    if unit_amb is None:
        diag = "z c_e is not invertible: the structure is weak (no unit)"
        rep.add("z c_e invertible", True, detail="no: weak crossed G-algebra only")
        return SeparabilityResult(None, False, z, rep, diag)

    unit = CA.hh.project(e, unit_amb)
    rep.add("z c_e invertible", True, detail="yes")
    with rep.timed("(5*) unit laws") as box:
        for g in G.elements:
            ident = F.identity(CA.dims[g])
            left = F.normalize(np.einsum("a,abk->bk", unit, CA.m[e, g]))
            right = F.normalize(np.einsum("b,abk->ak", unit, CA.m[g, e]))
            if not linalg.arrays_equal(left, ident):
                box["witness"] = {"g": g, "side": "left"}
                break
            if not linalg.arrays_equal(right, ident):
                box["witness"] = {"g": g, "side": "right"}
                break
    with rep.timed("(6*) non-degenerate pairing") as box:
        for g in G.elements:
            gi = G.inv(g)
            pairing = F.normalize(np.einsum("ijk,k->ij", CA.m[g, gi], CA.counit_vector))
            if CA.dims[g] != CA.dims[gi] or linalg.rank(pairing) != CA.dims[g]:
                box["witness"] = {"g": g, "rank": linalg.rank(pairing), "dims": (CA.dims[g], CA.dims[gi])}
                break
    honest = rep.ok
    return SeparabilityResult(unit, honest, z, rep, "" if honest else "unit found but honest axioms failed")
