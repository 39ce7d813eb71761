from fractions import Fraction

import pytest

from affinepm.laurent import FFMatrix, LaurentPoly, minimal_polynomial
from affinepm.pmgraph import (
    NOT_MULTIPLICATIVE,
    NOT_POSITIVE,
    POSITIVE,
    Edge,
    WeightedDigraph,
    expand,
    graph_from_json,
    graph_from_matrix,
    graph_to_dot,
    graph_to_json,
    level_sizes,
    minimal_polynomial_degree,
    multiplicative_basis_at,
    path_matrix,
    typed_isomorphic,
)

from helpers import A_EXAMPLE, B3_PRINTED, M1_INV_PRINTED, M1_PRINTED, NV, half, one, rf, z1, z2, z3


@pytest.fixture(scope="module")
def example():
    return graph_from_matrix(A_EXAMPLE, NV)


def test_example_minimal_polynomial(example):
    coeffs = minimal_polynomial(example.adjacency_ff())
    zero = 0 * one
    expected = [(z1 - z3) * (z1 - z3), zero, -4 * z2, -2 * (z1 + z3), zero, zero, one]
    assert [c.to_poly() for c in coeffs] == expected


def test_example_path_matrix_and_inverse(example):
    M1 = path_matrix(example, 0)
    assert M1 == FFMatrix(M1_PRINTED, NV)
    assert M1.inverse() == FFMatrix(M1_INV_PRINTED, NV)


def test_example_basis(example):
    cert = multiplicative_basis_at(example, 0)
    assert cert.verdict == POSITIVE
    assert cert.basis[2] == FFMatrix(B3_PRINTED, NV)
    for b in cert.basis:
        for row in b.rows:
            for x in row:
                assert not x or (x.is_poly() and x.to_poly().is_nonnegative())
                assert not x or min(min(e) for e in x.to_poly().terms) >= 0


def test_b3_is_the_printed_polynomial_in_A(example):
    A = example.adjacency_ff()
    A2 = A * A
    A5 = A2 * A2 * A
    inner = A.scale(rf(2 * z2)) + A2.scale(rf((3 * z1 + z3) * half)) - A5.scale(rf(half * one))
    assert inner.scale(rf(one, z1 - z3)) == FFMatrix(B3_PRINTED, NV)


def test_example_degree(example):
    assert minimal_polynomial_degree(example) == 6
    assert minimal_polynomial_degree(example, exact=False) == 6


@pytest.mark.parametrize("abcd", [(2, 1, 1, 1), (1, 2, 1, 1)])
def test_dihedral_counterexample(abcd):
    a, b, c, d = abcd
    G = graph_from_matrix([[0, 0, 0], [a, 0, d], [b, c, 0]], 0)
    cert = multiplicative_basis_at(G, 0)
    assert cert.verdict == NOT_POSITIVE
    assert cert.offending


def test_dihedral_inverse_path_matrix():
    G = graph_from_matrix([[0, 0, 0], [2, 0, 1], [1, 1, 0]], 0)
    third = Fraction(1, 3)
    assert path_matrix(G, 0).inverse() == FFMatrix([[1, 0, 0], [0, 2 * third, -third], [0, -third, 2 * third]], 0)


def test_singular_path_matrix_is_not_multiplicative():
    G = graph_from_matrix([[0, 0, 0], [1, 0, 1], [1, 1, 0]], 0)
    assert multiplicative_basis_at(G, 0).verdict == NOT_MULTIPLICATIVE


def test_rejects_negative_weights():
    with pytest.raises(ValueError):
        WeightedDigraph(["a"], [Edge(0, 0, None, LaurentPoly.constant(-1, 0))], 0)


def test_cycle_is_positive_and_structure_constants_are_monomials():
    # directed 3-cycle with weight z on the closing edge: the group algebra of Z/3 twisted by z
    z = LaurentPoly.var(0, 1)
    G = graph_from_matrix([[0, 0, z], [1, 0, 0], [0, 1, 0]], 1)
    cert = multiplicative_basis_at(G, 0)
    assert cert.positive
    assert all(c.is_monomial() for c in cert.structure_constants.values())


def test_expansion_of_a_cycle_is_a_path():
    z = LaurentPoly.var(0, 1)
    G = graph_from_matrix([[0, z], [1, 0]], 1)
    E = expand(G, 0, 5)
    assert level_sizes(E) == [1, 1, 1, 1, 1]
    assert len(E.edges) == 4


def test_expand_needs_monomials():
    z = LaurentPoly.var(0, 1)
    G = graph_from_matrix([[0, z + 1], [1, 0]], 1)
    with pytest.raises(ValueError):
        expand(G, 0, 3)
    assert level_sizes(expand(G.split_weights(), 0, 4)) == [1, 1, 2, 2]


def test_typed_isomorphism_respects_types_and_weights(example):
    perm = [0, 1, 3, 2, 5, 4]
    relabelled = [[A_EXAMPLE[perm[i]][perm[j]] for j in range(6)] for i in range(6)]
    ok, mapping = typed_isomorphic(graph_from_matrix(relabelled, NV), example)
    assert ok and sorted(mapping.values()) == list(range(6))
    changed = [list(r) for r in A_EXAMPLE]
    changed[0][4] = z1
    H = graph_from_matrix(changed, NV)
    assert not typed_isomorphic(example, H)[0]
    assert typed_isomorphic(example, H, respect_weights=False)[0]


def test_json_round_trip_is_byte_identical(example):
    text = graph_to_json(example)
    assert graph_to_json(graph_from_json(text)) == text


def test_dot_prints_only_nontrivial_weights(example):
    dot = graph_to_dot(example)
    assert dot.count("->") == len(example.edges) == 12
    assert dot.count("label=\"z") == 6
