import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedhh import linalg
from crossedhh.field import RATIONALS, Field


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1) ** inversions
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def minor_rank(rows):
    """Largest k with a nonzero k x k minor."""
    m, n = len(rows), len(rows[0])
    for k in range(min(m, n), 0, -1):
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(n), k):
                if leibniz_det([[rows[r][c] for c in ci] for r in ri]) != 0:
                    return k
    return 0


def kernel_size_mod_p(rows, p):
    n = len(rows[0])
    return sum(
        1
        for v in itertools.product(range(p), repeat=n)
        if all(sum(r[j] * v[j] for j in range(n)) % p == 0 for r in rows)
    )


small_ints = st.integers(min_value=-3, max_value=3)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(rows):
    assert linalg.rank(RATIONALS.matrix(rows)) == minor_rank(rows)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4))
def test_rank_mod_5_matches_kernel_count(rows):
    F = Field(5)
    r = linalg.rank(F.matrix(rows))
    assert 5 ** (len(rows[0]) - r) == kernel_size_mod_p(rows, 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_invert_or_singular(rows):
    m = RATIONALS.matrix(rows)
    if leibniz_det(rows) == 0:
        with pytest.raises(linalg.SingularMatrix):
            linalg.invert(m)
    else:
        inv = linalg.invert(m)
        assert linalg.arrays_equal(m @ inv, RATIONALS.identity(len(rows)))
        assert linalg.arrays_equal(inv @ m, RATIONALS.identity(len(rows)))


def test_invert_known_matrix():
    inv = linalg.invert(RATIONALS.matrix([[2, 1], [1, 1]]))
    assert linalg.arrays_equal(inv, RATIONALS.matrix([[1, -1], [-1, 2]]))


def test_invert_over_gf_p():
    F = Field(7)
    inv = linalg.invert(F.matrix([[3]]))
    assert inv[0, 0] == 5


def test_rref_integer_input_stays_exact():
    r, piv = linalg.rref(np.array([[2, 4], [1, 3]], dtype=object))
    assert piv == [0, 1]
    assert all(isinstance(x, Fraction) for x in r.flat)


def test_solve():
    a = RATIONALS.matrix([[1, 1], [1, -1]])
    x = linalg.solve(a, RATIONALS.vector([3, 1]))
    assert list(x) == [2, 1]
    assert linalg.solve(RATIONALS.matrix([[1, 1], [1, 1]]), RATIONALS.vector([1, 2])) is None


def test_span_and_containment():
    s = linalg.span([RATIONALS.vector([1, 1, 0]), RATIONALS.vector([2, 2, 0])], 3)
    assert s.dim == 1
    assert s.contains(RATIONALS.vector([-5, -5, 0]))
    assert not s.contains(RATIONALS.vector([1, 0, 0]))
    t = linalg.span([RATIONALS.vector([3, 3, 0])], 3)
    assert linalg.subspaces_equal(s, t)


def test_empty_span():
    s = linalg.span([], 4)
    assert s.dim == 0
    assert s.contains(RATIONALS.zeros(4))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=0, max_size=4))
def test_quotient_data_properties(vectors):
    F = RATIONALS
    s = linalg.span([F.vector(v) for v in vectors], 4)
    proj, sect, q = linalg.quotient_data(s, F)
    assert q == 4 - s.dim
    assert linalg.arrays_equal(F.normalize(proj @ sect), F.identity(q))
    for v in vectors:
        assert linalg.is_zero(F.normalize(proj @ F.vector(v)))
    # the kernel of the projection is exactly s
    if q:
        kernel = linalg.span([F.normalize(v - sect @ (proj @ v)) for v in F.identity(4)], 4)
        assert linalg.subspaces_equal(kernel, s)


def test_dimension_mismatch():
    with pytest.raises(linalg.DimensionMismatch):
        linalg.span([RATIONALS.vector([1, 2])], 3)
