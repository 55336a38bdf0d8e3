"""Exact ground fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class Residue:
    """An element of GF(p), stored as its representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Residue(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Residue(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """A ground field; characteristic 0 means the rationals.

    Calling the field converts ints, Fractions, residues and scalar strings
    such as ``"3"``, ``"-1/2"`` into field elements.
    """

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic

    @classmethod
    def from_spec(cls, spec: str) -> Field:
        """Parse ``q`` or ``gf:<p>``."""
        spec = spec.strip().lower()
        if spec in ("q", "qq", "rationals"):
            return cls(0)
        if spec.startswith("gf:"):
            return cls(int(spec[3:]))
        raise ValueError(f"unknown field spec {spec!r} (expected 'q' or 'gf:<p>')")

    @property
    def spec(self) -> str:
        return "q" if self.characteristic == 0 else f"gf:{self.characteristic}"

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(self.characteristic)

    def __repr__(self):
        return f"Field({self.spec!r})"

    def __call__(self, x):
        p = self.characteristic
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Residue):
            if p == 0 or x.p != p:
                raise ValueError(f"cannot move GF({x.p}) element into {self.spec}")
            return x
        if isinstance(x, (bool, np.bool_)):
            x = int(x)
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x)) if p == 0 else Residue(int(x), p)
        if isinstance(x, Fraction):
            if p == 0:
                return x
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return Residue(x.numerator * pow(x.denominator, -1, p), p)
        raise TypeError(f"cannot convert {type(x).__name__} to an exact field element")

    def parse(self, s: str):
        s = s.strip()
        if "/" in s:
            num, _, den = s.partition("/")
            n, d = int(num), int(den)
            if d == 0:
                raise ZeroDivisionError(f"zero denominator in {s!r}")
            return self(Fraction(n, d))
        return self(int(s))

    def format(self, x) -> str:
        return str(self(x))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def vector(self, values) -> np.ndarray:
        out = np.empty(len(values), dtype=object)
        for i, v in enumerate(values):
            out[i] = self(v)
        return out

    def matrix(self, rows) -> np.ndarray:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        out = np.empty((len(rows), ncols), dtype=object)
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
            for j, v in enumerate(r):
                out[i, j] = self(v)
        return out

    def zeros(self, *shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.one
        return out

    def unit_vector(self, n: int, i: int) -> np.ndarray:
        out = self.zeros(n)
        out[i] = self.one
        return out

    def normalize(self, arr: np.ndarray) -> np.ndarray:
        """Coerce every entry of an object array into this field (fixes bare ints)."""
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = self(v)
        return out


RATIONALS = Field(0)
