"""Finite groups given by full Cayley tables.

Element ordering of the standard builders:

* ``cyclic(n)``: index ``k`` is the residue ``k mod n``; index 0 is the identity.
* ``symmetric(n)``: permutations of ``range(n)`` in ``itertools.permutations``
  (lexicographic) order, composed as functions: ``(s*t)(i) = s(t(i))``.
* ``direct_product(a, b)``: the pair ``(i, j)`` has index ``i * b.order + j``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 20000
ASSOCIATIVITY_SEED = 0


class GroupError(ValueError):
    pass


class NotAssociative(GroupError):
    def __init__(self, triple):
        self.witness = triple
        super().__init__(f"table is not associative at {triple}")


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    def __init__(self, element):
        self.witness = element
        super().__init__(f"element {element} has no two-sided inverse")


@dataclass(frozen=True)
class FiniteGroup:
    cayley: tuple
    identity: int
    inverses: tuple
    names: tuple = ()

    @property
    def order(self) -> int:
        return len(self.cayley)

    @property
    def elements(self) -> range:
        return range(self.order)

    def _check(self, *gs):
        for g in gs:
            if not 0 <= g < self.order:
                raise IndexError(f"element index {g} out of range for order {self.order}")

    def mul(self, g: int, h: int) -> int:
        self._check(g, h)
        return self.cayley[g][h]

    def inv(self, g: int) -> int:
        self._check(g)
        return self.inverses[g]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.mul(self.mul(g, h), self.inv(g))

    def prod(self, *gs: int) -> int:
        out = self.identity
        for g in gs:
            out = self.mul(out, g)
        return out

    def power(self, g: int, k: int) -> int:
        base = g if k >= 0 else self.inv(g)
        out = self.identity
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out

    def commutes(self, g: int, h: int) -> bool:
        return self.mul(g, h) == self.mul(h, g)

    def commuting_pairs(self) -> list:
        return [(g, h) for g in self.elements for h in self.elements if self.commutes(g, h)]

    def is_abelian(self) -> bool:
        return all(self.commutes(g, h) for g in self.elements for h in self.elements)

    def name(self, g: int) -> str:
        return self.names[g] if self.names else str(g)


def from_cayley_table(table, names=None) -> FiniteGroup:
    rows = [list(map(int, r)) for r in table]
    n = len(rows)
    if n == 0:
        raise GroupError("empty table")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise GroupError(f"row {i} has length {len(r)}, expected {n}")
        for v in r:
            if not 0 <= v < n:
                raise GroupError(f"entry {v} in row {i} out of range [0, {n})")

    identity = next(
        (e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))),
        None,
    )
    if identity is None:
        raise NoIdentity("no two-sided identity element")

    inverses = []
    for g in range(n):
        inv = next((h for h in range(n) if rows[g][h] == identity and rows[h][g] == identity), None)
        if inv is None:
            raise NoInverse(g)
        inverses.append(inv)

    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(ASSOCIATIVITY_SEED)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(ASSOCIATIVITY_SAMPLES))
    for a, b, c in triples:
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NotAssociative((a, b, c))

    return FiniteGroup(
        cayley=tuple(tuple(r) for r in rows),
        identity=identity,
        inverses=tuple(inverses),
        names=tuple(names) if names else (),
    )


def trivial() -> FiniteGroup:
    return cyclic(1)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return from_cayley_table(table, names=[str(i) for i in range(n)])


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError("symmetric(n) supports 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms]
    names = ["".join(map(str, p)) for p in perms]
    return from_cayley_table(table, names=names)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    nb = b.order
    n = a.order * nb
    table = [
        [a.mul(i // nb, j // nb) * nb + b.mul(i % nb, j % nb) for j in range(n)]
        for i in range(n)
    ]
    names = [f"({a.name(i // nb)},{b.name(i % nb)})" for i in range(n)]
    return from_cayley_table(table, names=names)


def parse_group_spec(spec: str) -> FiniteGroup:
    """``trivial``, ``cyclic:<n>``, ``symmetric:<n>``, or ``product:<spec>,<spec>``."""
    spec = spec.strip().lower()
    if spec == "trivial":
        return trivial()
    kind, _, arg = spec.partition(":")
    if kind in ("cyclic", "z") and arg:
        return cyclic(int(arg))
    if kind in ("symmetric", "s") and arg:
        return symmetric(int(arg))
    if kind == "product" and "," in arg:
        left, right = _split_top_level(arg)
        return direct_product(parse_group_spec(left), parse_group_spec(right))
    if spec == "klein":
        return direct_product(cyclic(2), cyclic(2))
    raise ValueError(f"unknown group spec {spec!r}")


def _split_top_level(s: str):
    # product:product:cyclic:2,cyclic:2,cyclic:3 splits at the last comma
    i = s.rfind(",")
    return s[:i], s[i + 1 :]
