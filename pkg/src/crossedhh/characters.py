"""2-characters chi(g, h) = Tr(g acting on HH0_h) for commuting pairs."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup
from .hochschild import HochschildBundle
from .report import Report

MODULAR_SEED = 20240917
MODULAR_WORDS = 10
MODULAR_WORD_LENGTH = 12

# SL(2,Z) generators acting on exponent pairs; (a b; c d) sends (g, h) to (g^a h^b, g^c h^d)
_T = ((1, 1), (0, 1))
_S = ((0, -1), (1, 0))
_T_INV = ((1, -1), (0, 1))
_S_INV = ((0, 1), (-1, 0))
GENERATORS = {"T": _T, "S": _S, "T^-1": _T_INV, "S^-1": _S_INV}


class NotCommuting(ValueError):
    pass


@dataclass
class CharTable:
    group: FiniteGroup
    entries: dict

    def __getitem__(self, pair):
        if pair not in self.entries:
            raise NotCommuting(f"chi is only defined on commuting pairs, got {pair}")
        return self.entries[pair]

    def rows(self):
        return sorted(self.entries.items())


def two_character(HB: HochschildBundle) -> CharTable:
    G = HB.group
    entries = {}
    for g, h in G.commuting_pairs():
        t = HB.induced[g, h]
        if G.conj(g, h) != h or t.shape[0] != t.shape[1]:
            raise AssertionError(f"T_h(g) is not an endomorphism for commuting pair {(g, h)}")
        entries[g, h] = HB.field(np.trace(t)) if t.shape[0] else HB.field.zero
    return CharTable(G, entries)


def character_value(HB: HochschildBundle, g: int, h: int):
    if not HB.group.commutes(g, h):
        raise NotCommuting(f"{g} and {h} do not commute")
    return two_character(HB)[g, h]


def verify_two_class(CT: CharTable, group: FiniteGroup) -> Report:
    rep = Report("2-class function")
    with rep.timed("chi(kgk^-1, khk^-1) = chi(g, h)") as box:
        for (g, h), value in CT.rows():
            for k in group.elements:
                other = CT.entries.get((group.conj(k, g), group.conj(k, h)))
                if other != value:
                    box["witness"] = {"k": k, "g": g, "h": h, "chi(g,h)": value, "conjugated": other}
                    break
            if box["witness"]:
                break
    return rep


def _matmul2(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def random_sl2_words(seed: int = MODULAR_SEED, count: int = MODULAR_WORDS, length: int = MODULAR_WORD_LENGTH):
    """Seeded words in S, T and their inverses, with their product matrices."""
    rng = random.Random(seed)
    names = sorted(GENERATORS)
    out = []
    for _ in range(count):
        word = [rng.choice(names) for _ in range(length)]
        mat = ((1, 0), (0, 1))
        for w in word:
            mat = _matmul2(mat, GENERATORS[w])
        out.append((word, mat))
    return out


def transform_pair(group: FiniteGroup, mat, g: int, h: int):
    (a, b), (c, d) = mat
    return (
        group.mul(group.power(g, a), group.power(h, b)),
        group.mul(group.power(g, c), group.power(h, d)),
    )


def verify_modular(CT: CharTable, group: FiniteGroup, seed: int = MODULAR_SEED) -> Report:
    rep = Report("modular invariance")
    with rep.timed("T: chi(gh, h) = chi(g, h)") as box:
        for (g, h), value in CT.rows():
            other = CT.entries.get((group.mul(g, h), h))
            if other != value:
                box["witness"] = {"g": g, "h": h, "chi(g,h)": value, "chi(gh,h)": other}
                break
    with rep.timed("S: chi(h^-1, g) = chi(g, h)") as box:
        for (g, h), value in CT.rows():
            other = CT.entries.get((group.inv(h), g))
            if other != value:
                box["witness"] = {"g": g, "h": h, "chi(g,h)": value, "chi(h^-1,g)": other}
                break
    words = random_sl2_words(seed)
    with rep.timed("random SL(2,Z) words", detail=f"{len(words)} words, seed {seed}") as box:
        for word, mat in words:
            for (g, h), value in CT.rows():
                other = CT.entries.get(transform_pair(group, mat, g, h))
                if other != value:
                    box["witness"] = {"word": " ".join(word), "matrix": mat, "g": g, "h": h}
                    break
            if box["witness"]:
                break
    return rep
