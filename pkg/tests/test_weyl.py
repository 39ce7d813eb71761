import pytest

from affinepm import weyl
from affinepm.cartan import build_affine_data


@pytest.mark.parametrize("label,rank,order,longest", [("A", 2, 6, 3), ("A", 3, 24, 6), ("C", 3, 48, 9), ("G2", None, 12, 6)])
def test_group_order_and_longest(label, rank, order, longest):
    d = build_affine_data(label, rank)
    assert len(weyl.enumerate_group(d)) == order
    assert weyl.longest_element(d).length() == longest


def test_coxeter_relations_G2():
    d = build_affine_data("G2")
    s1, s2 = weyl.simple_reflection(d, 1), weyl.simple_reflection(d, 2)
    assert (s1 * s1).is_identity() and (s2 * s2).is_identity()
    assert weyl.from_word(d, [1, 2] * 6).is_identity()
    assert not weyl.from_word(d, [1, 2] * 3).is_identity()


def test_reduced_words_are_reduced():
    d = build_affine_data("C", 3)
    for u in weyl.enumerate_group(d):
        w = u.reduced_word()
        assert len(w) == u.length()
        assert weyl.from_word(d, w) == u


def test_minimal_coset_representatives_A3():
    d = build_affine_data("A", 3)
    WJ = weyl.enumerate_WJ(d, [1, 3])
    assert sorted(tuple(u.reduced_word()) for u in WJ) == sorted(
        [(), (2,), (1, 2), (3, 2), (1, 3, 2), (2, 1, 3, 2)]
    )
    assert all(weyl.is_min_coset_rep(u, [1, 3]) for u in WJ)


def test_coset_factorisation():
    d = build_affine_data("G2")
    for u in weyl.enumerate_group(d):
        m = weyl.min_coset_rep(u, [1])
        assert weyl.is_min_coset_rep(m, [1])
        assert m.length() <= u.length()


def test_complement():
    d = build_affine_data("C", 3)
    assert weyl.complement(d, [2]) == [1, 3]
