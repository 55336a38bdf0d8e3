"""JSON instance files for twisted Frobenius algebra bundles.

Schema (``format_version`` 1)::

    {
      "format_version": 1,
      "name": str,
      "field": "q" | "gf:<p>",
      "group": {"order": n, "cayley": [[int]*n]*n, "names": [str]*n (optional)},
      "algebra": {"dim": d,
                  "structure_constants": [[i, j, k, "value"], ...],   # nonzeros only
                  "unit": ["value"]*d, "trace": ["value"]*d},
      "action": {"rho": [d x d matrix of "value"] * n,               # column v = rho(g)(e_v)
                 "c": [[["value"]*d] * n] * n,                        # c[g][h]
                 "c_e": ["value"]*d}
    }

Scalars are strings ``"num/den"`` or ``"int"``; no floating point is accepted.
"""

from __future__ import annotations

import json

import numpy as np

from .bundle import TwistedBundle
from .field import Field
from .frobenius import AlgebraData
from .groups import GroupError, from_cayley_table
from .linalg import arrays_equal

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message, path="", line=None):
        self.path = path
        self.line = line
        where = f" at {path}" if path else ""
        if line is not None:
            where += f" (line {line})"
        super().__init__(f"{message}{where}")


def serialize_instance(B: TwistedBundle) -> str:
    F = B.field
    A = B.algebra
    fmt = F.format
    sc = [
        [i, j, k, fmt(v)]
        for (i, j, k), v in np.ndenumerate(A.mu)
        if v != 0
    ]
    doc = {
        "format_version": FORMAT_VERSION,
        "name": B.name,
        "field": F.spec,
        "group": {
            "order": B.group.order,
            "cayley": [list(r) for r in B.group.cayley],
        },
        "algebra": {
            "dim": A.dim,
            "structure_constants": sc,
            "unit": [fmt(v) for v in A.unit],
            "trace": [fmt(v) for v in A.trace],
        },
        "action": {
            "rho": [[[fmt(v) for v in row] for row in r] for r in B.rho],
            "c": [[[fmt(v) for v in vec] for vec in row] for row in B.c],
            "c_e": [fmt(v) for v in B.c_e],
        },
    }
    if B.group.names:
        doc["group"]["names"] = list(B.group.names)
    return json.dumps(doc, indent=1) + "\n"


def _scalar(F: Field, value, path):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"scalar must be a string or integer, got {type(value).__name__}", path)
    try:
        return F(value) if isinstance(value, int) else F.parse(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {value!r}: {exc}", path) from None


def _vector(F, values, n, path):
    if not isinstance(values, list) or len(values) != n:
        raise ParseError(f"expected a list of {n} scalars", path)
    out = np.empty(n, dtype=object)
    for i, v in enumerate(values):
        out[i] = _scalar(F, v, f"{path}[{i}]")
    return out


def _get(doc, key, path):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"missing key {key!r}", path)
    return doc[key]


def parse_instance(text: str, field: Field | None = None, validate: bool = True) -> TwistedBundle:
    """Parse an instance document; ``field`` overrides the field named in the file."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    version = _get(doc, "format_version", "$")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}", "$.format_version")
    if field is None:
        try:
            field = Field.from_spec(_get(doc, "field", "$"))
        except ValueError as exc:
            raise ParseError(str(exc), "$.field") from None
    F = field

    grp = _get(doc, "group", "$")
    table = _get(grp, "cayley", "$.group")
    try:
        G = from_cayley_table(table, names=grp.get("names"))
    except (GroupError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid group: {exc}", "$.group.cayley") from None
    if _get(grp, "order", "$.group") != G.order:
        raise ParseError("order does not match the Cayley table", "$.group.order")

    alg = _get(doc, "algebra", "$")
    n = _get(alg, "dim", "$.algebra")
    if not isinstance(n, int) or n < 1:
        raise ParseError("dim must be a positive integer", "$.algebra.dim")
    mu = F.zeros(n, n, n)
    for r, rec in enumerate(_get(alg, "structure_constants", "$.algebra")):
        path = f"$.algebra.structure_constants[{r}]"
        if not isinstance(rec, list) or len(rec) != 4:
            raise ParseError("expected [i, j, k, value]", path)
        i, j, k, v = rec
        if not all(isinstance(x, int) and 0 <= x < n for x in (i, j, k)):
            raise ParseError("index out of range", path)
        mu[i, j, k] = _scalar(F, v, path + "[3]")
    unit = _vector(F, _get(alg, "unit", "$.algebra"), n, "$.algebra.unit")
    trace = _vector(F, _get(alg, "trace", "$.algebra"), n, "$.algebra.trace")
    A = AlgebraData(F, mu, unit, trace)

    act = _get(doc, "action", "$")
    rho_doc = _get(act, "rho", "$.action")
    if not isinstance(rho_doc, list) or len(rho_doc) != G.order:
        raise ParseError(f"expected {G.order} matrices", "$.action.rho")
    rho = []
    for g, mat in enumerate(rho_doc):
        path = f"$.action.rho[{g}]"
        if not isinstance(mat, list) or len(mat) != n:
            raise ParseError(f"expected {n} rows", path)
        rho.append(np.vstack([_vector(F, row, n, f"{path}[{i}]") for i, row in enumerate(mat)]))
    c_doc = _get(act, "c", "$.action")
    if not isinstance(c_doc, list) or len(c_doc) != G.order:
        raise ParseError(f"expected {G.order} rows", "$.action.c")
    c = []
    for g, row in enumerate(c_doc):
        if not isinstance(row, list) or len(row) != G.order:
            raise ParseError(f"expected {G.order} entries", f"$.action.c[{g}]")
        c.append([_vector(F, v, n, f"$.action.c[{g}][{h}]") for h, v in enumerate(row)])
    c_e = _vector(F, _get(act, "c_e", "$.action"), n, "$.action.c_e")

    B = TwistedBundle(A, G, rho, c, c_e, name=doc.get("name", ""))
    return B.validate() if validate else B


def load_instance(path, field: Field | None = None, validate: bool = True) -> TwistedBundle:
    with open(path) as fh:
        return parse_instance(fh.read(), field, validate)


def save_instance(B: TwistedBundle, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_instance(B))


def bundles_equal(a: TwistedBundle, b: TwistedBundle) -> bool:
    return (
        a.field == b.field
        and a.group.cayley == b.group.cayley
        and arrays_equal(a.algebra.mu, b.algebra.mu)
        and arrays_equal(a.algebra.unit, b.algebra.unit)
        and arrays_equal(a.algebra.trace, b.algebra.trace)
        and all(arrays_equal(x, y) for x, y in zip(a.rho, b.rho))
        and all(arrays_equal(x, y) for r, s in zip(a.c, b.c) for x, y in zip(r, s))
        and arrays_equal(a.c_e, b.c_e)
    )
