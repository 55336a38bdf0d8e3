"""End-to-end pipeline: validate a bundle, build HH0 and its crossed structure, run every check."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bundle as bundle_mod
from . import characters, crossed, frobenius, hochschild
from .bundle import TwistedBundle
from .frobenius import AlgebraData
from .report import Report


@dataclass
class SuiteResult:
    reports: list = field(default_factory=list)
    hh: object = None
    crossed: object = None
    separability: object = None
    table: object = None

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def failed_checks(self) -> list:
        return [(r.title, c) for r in self.reports for c in r.failures()]


def _crash(stage: str, exc: Exception) -> Report:
    rep = Report(stage)
    rep.add("construction", False, {"error": type(exc).__name__, "message": str(exc)})
    return rep


def run_full_suite(B: TwistedBundle, xi=None, seed: int = characters.MODULAR_SEED) -> SuiteResult:
    """Every check in the library on one bundle, without raising.

    ``xi`` replaces the copairing used by the crossed structure (negative testing).
    Construction errors on corrupted inputs become failed checks.
    """
    out = SuiteResult()
    out.reports.extend(B.validation_reports())
    try:
        X = B.xi if xi is None else xi
        out.reports.append(frobenius.verify_copairing_identities(B.algebra, X))
        out.reports.append(bundle_mod.verify_inverse_consistency(B))
    except Exception as exc:  # noqa: BLE001 - corrupted inputs may break any stage
        out.reports.append(_crash("copairing", exc))
        return out
    try:
        out.hh = hochschild.build_hh0(B)
        out.reports.append(hochschild.verify_prop_maps(out.hh))
        out.reports.append(hochschild.verify_prop_repr(out.hh))
    except Exception as exc:  # noqa: BLE001
        out.reports.append(_crash("hochschild", exc))
        return out
    try:
        out.crossed = crossed.build_crossed(out.hh, xi)
        out.reports.append(crossed.verify_weak_crossed(out.crossed))
        out.separability = crossed.separability_unit(out.crossed)
        out.reports.append(out.separability.report)
    except Exception as exc:  # noqa: BLE001
        out.reports.append(_crash("crossed", exc))
        return out
    try:
        out.table = characters.two_character(out.hh)
        out.reports.append(characters.verify_two_class(out.table, B.group))
        out.reports.append(characters.verify_modular(out.table, B.group, seed))
    except Exception as exc:  # noqa: BLE001
        out.reports.append(_crash("characters", exc))
    return out


# Documented single-scalar corruptions. Each returns (bundle, copairing override).


def _copy(B: TwistedBundle, mu=None, trace=None, rho=None, c=None) -> TwistedBundle:
    A = B.algebra
    alg = AlgebraData(
        A.field,
        A.mu.copy() if mu is None else mu,
        A.unit.copy(),
        A.trace.copy() if trace is None else trace,
    )
    return TwistedBundle(
        alg,
        B.group,
        [r.copy() for r in B.rho] if rho is None else rho,
        [[v.copy() for v in row] for row in B.c] if c is None else c,
        B.c_e.copy(),
        name=B.name + "-mutated",
    )


def corrupt_structure_constant(B: TwistedBundle):
    """Add 1 to mu[i, j, j] where u_i != 0; the left unit law then fails at e_j."""
    mu = B.algebra.mu.copy()
    i = next(k for k, v in enumerate(B.algebra.unit) if v != 0)
    j = B.algebra.dim - 1
    mu[i, j, j] = mu[i, j, j] + B.field.one
    return _copy(B, mu=mu), None


def corrupt_cocycle(B: TwistedBundle):
    """Negate the first nonzero coordinate of c(e, g) for the last element g."""
    c = [[v.copy() for v in row] for row in B.c]
    e, g = B.group.identity, B.group.order - 1
    k = next(k for k, v in enumerate(c[e][g]) if v != 0)
    c[e][g][k] = -c[e][g][k]
    return _copy(B, c=c), None


def corrupt_trace(B: TwistedBundle):
    """Set the first nonzero trace entry to zero."""
    trace = B.algebra.trace.copy()
    k = next(k for k, v in enumerate(trace) if v != 0)
    trace[k] = B.field.zero
    return _copy(B, trace=trace), None


def corrupt_rho(B: TwistedBundle):
    """Add 1 to entry [0, 0] of rho(g) for the last element g."""
    rho = [r.copy() for r in B.rho]
    g = B.group.order - 1
    rho[g][0, 0] = rho[g][0, 0] + B.field.one
    return _copy(B, rho=rho), None


def corrupt_copairing(B: TwistedBundle):
    """Keep the bundle, feed the crossed structure a copairing with X[0, 0] + 1."""
    X = B.xi.copy()
    X[0, 0] = X[0, 0] + B.field.one
    return B, X


MUTATIONS = {
    "structure-constant": corrupt_structure_constant,
    "cocycle": corrupt_cocycle,
    "trace": corrupt_trace,
    "rho": corrupt_rho,
    "copairing": corrupt_copairing,
}
