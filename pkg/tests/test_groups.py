import itertools

import pytest

from crossedhh import groups
from crossedhh.groups import cyclic, direct_product, from_cayley_table, parse_group_spec, symmetric, trivial


def conjugacy_class_count(G):
    """Orbit count of the conjugation action, straight from the Cayley table."""
    seen, classes = set(), 0
    for x in G.elements:
        if x in seen:
            continue
        classes += 1
        seen |= {G.mul(G.mul(k, x), G.inv(k)) for k in G.elements}
    return classes


def test_orders():
    assert trivial().order == 1
    assert cyclic(5).order == 5
    assert symmetric(3).order == 6
    assert symmetric(4).order == 24
    assert direct_product(cyclic(2), cyclic(3)).order == 6


def test_cyclic_is_addition_mod_n():
    G = cyclic(4)
    for a, b in itertools.product(range(4), repeat=2):
        assert G.mul(a, b) == (a + b) % 4
    assert G.inv(1) == 3
    assert G.power(1, -1) == 3
    assert G.power(3, 6) == 2


def test_symmetric_group_is_nonabelian():
    S3 = symmetric(3)
    assert not S3.is_abelian()
    assert S3.identity == 0
    assert conjugacy_class_count(S3) == 3
    assert conjugacy_class_count(symmetric(4)) == 5


def test_commuting_pairs_of_s3():
    # each of the 3 classes contributes |centralizer| pairs: 6 + 3*2 + 2*3 = 18
    assert len(symmetric(3).commuting_pairs()) == 18


def test_conj():
    S3 = symmetric(3)
    for g, h in itertools.product(S3.elements, repeat=2):
        assert S3.conj(g, h) == S3.prod(g, h, S3.inv(g))


def test_klein_spec():
    K = parse_group_spec("klein")
    assert K.order == 4 and K.is_abelian()
    assert all(K.mul(g, g) == K.identity for g in K.elements)
    assert parse_group_spec("product:cyclic:2,cyclic:3").order == 6
    assert parse_group_spec("symmetric:3").order == 6
    with pytest.raises(ValueError):
        parse_group_spec("dihedral:4")


def test_no_identity():
    with pytest.raises(groups.NoIdentity):
        from_cayley_table([[1, 0], [0, 0]])


def test_no_inverse():
    # monoid {0, 1} under max: identity 0, element 1 has no inverse
    with pytest.raises(groups.NoInverse) as exc:
        from_cayley_table([[0, 1], [1, 1]])
    assert exc.value.witness == 1


def test_not_associative_reports_witness():
    # a Latin square with identity 0 that is not a group table (order 5 loop)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(groups.NotAssociative) as exc:
        from_cayley_table(table)
    a, b, c = exc.value.witness
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_malformed_table():
    with pytest.raises(groups.GroupError):
        from_cayley_table([[0, 1], [1]])
