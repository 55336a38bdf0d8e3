import itertools

import pytest

from crossedhh import characters
from crossedhh.builders import klein, klein_sign_cocycle
from crossedhh.characters import CharTable, NotCommuting
from crossedhh.groups import cyclic, symmetric

from conftest import SHIPPED_KEYS, suite
from oracles import group_algebra_character


def table(key):
    return suite(key).table


@pytest.mark.parametrize("key,H", [("ga-z2", cyclic(2)), ("ga-z3", cyclic(3)), ("ga-s3", symmetric(3))])
def test_group_algebra_characters_match_permutation_oracle(key, H):
    CT = table(key)
    assert set(CT.entries) == set(H.commuting_pairs())
    for (g, h), v in CT.rows():
        assert v == group_algebra_character(H, g, h)


def test_s3_characters_are_class_count():
    assert {v for _, v in table("ga-s3").rows()} == {3}


def test_point_with_b_field_gives_discrete_torsion():
    # chi(g,h) = c(g,h)/c(h,g) for a point with a scalar B-field on an abelian group
    G = klein()
    c = klein_sign_cocycle(G)
    CT = table("fa-klein-point-twisted")
    for g, h in itertools.product(G.elements, repeat=2):
        assert CT[g, h] == c[g][h] * c[h][g]  # values are +-1, so the ratio is the product


def test_trivial_group_single_entry():
    CT = table("trivial-k")
    assert CT.rows() == [((0, 0), 1)]
    assert CT[0, 0] == suite("trivial-k").hh.dims[0]


def test_truncated_polynomial_sign():
    # chi(e,e) = dim HH0_e = 3; chi(s,e) = trace of x -> -x on <1, x, x^2> = 1; HH0_s = <1>
    CT = table("trunc-sign")
    assert CT[0, 0] == 3 and CT[1, 0] == 1 and CT[0, 1] == 1 and CT[1, 1] == 1


def test_diagonal_entries_are_graded_dims():
    # the special condition makes T_g(g) the identity, so chi(g, g) = dim HH0_g
    for key in SHIPPED_KEYS:
        res = suite(key)
        for g in res.hh.group.elements:
            assert res.table[g, g] == res.hh.dims[g]


@pytest.mark.parametrize("key", SHIPPED_KEYS)
def test_invariance_checks_pass(key):
    titles = {r.title: r for r in suite(key).reports}
    assert titles["2-class function"].ok
    modular = titles["modular invariance"]
    assert modular.names() == ["T: chi(gh, h) = chi(g, h)", "S: chi(h^-1, g) = chi(g, h)", "random SL(2,Z) words"]
    assert modular.ok


def test_not_commuting_pair():
    S3 = symmetric(3)
    non = next((g, h) for g, h in itertools.product(S3.elements, repeat=2) if not S3.commutes(g, h))
    with pytest.raises(NotCommuting):
        table("ga-s3")[non]
    with pytest.raises(NotCommuting):
        characters.character_value(suite("ga-s3").hh, *non)


def test_corrupted_table_fails_with_witness():
    G = klein()
    entries = dict(table("fa-klein-point-twisted").entries)
    entries[1, 2] = entries[1, 2] + 5
    bad = CharTable(G, entries)
    two_class = characters.verify_two_class(bad, G)
    assert two_class.ok  # abelian: conjugation moves nothing
    modular = characters.verify_modular(bad, G)
    assert not modular["S: chi(h^-1, g) = chi(g, h)"].passed
    assert modular["S: chi(h^-1, g) = chi(g, h)"].witness is not None


def test_two_class_detects_conjugation_asymmetry():
    S3 = symmetric(3)
    entries = dict(table("ga-s3").entries)
    transposition = next(g for g in S3.elements if g != 0 and S3.mul(g, g) == 0)
    entries[0, transposition] = entries[0, transposition] + 1
    rep = characters.verify_two_class(CharTable(S3, entries), S3)
    assert not rep.ok


def test_random_words_are_seeded_and_in_sl2z():
    a = characters.random_sl2_words(5)
    b = characters.random_sl2_words(5)
    assert a == b and len(a) == 10
    assert all(len(w) == 12 for w, _ in a)
    for _, ((p, q), (r, s)) in a:
        assert p * s - q * r == 1
    assert characters.random_sl2_words(6) != a


def test_transform_pair_generators():
    G = cyclic(5)
    assert characters.transform_pair(G, characters.GENERATORS["T"], 1, 2) == (3, 2)
    assert characters.transform_pair(G, characters.GENERATORS["S"], 1, 2) == (G.inv(2), 1)
