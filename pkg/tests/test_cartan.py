import pytest

from affinepm.cartan import UnsupportedType, build_affine_data


@pytest.mark.parametrize(
    "label,rank,marks,det,nroots",
    [
        ("A", 2, (1, 1, 1), 3, 3),
        ("A", 3, (1, 1, 1, 1), 4, 6),
        ("B", 3, (1, 1, 2, 2), 2, 9),
        ("C", 3, (1, 2, 2, 1), 2, 9),
        ("D", 4, (1, 1, 2, 1, 1), 4, 12),
        ("G2", None, (1, 3, 2), 1, 6),
    ],
)
def test_tables(label, rank, marks, det, nroots):
    d = build_affine_data(label, rank)
    assert d.marks == marks
    assert d.det() == det
    assert len(d.positive_roots()) == nroots
    # marks span the right kernel of the affine Cartan matrix, comarks the left one
    A = d.affine_cartan
    n = len(A)
    assert all(sum(A[i][j] * d.marks[j] for j in range(n)) == 0 for i in range(n))
    assert all(sum(d.comarks[i] * A[i][j] for i in range(n)) == 0 for j in range(n))


def test_highest_roots():
    assert build_affine_data("C", 3).highest_root().coords == (2, 2, 1)
    assert build_affine_data("G2").highest_root().coords == (3, 2)
    assert build_affine_data("A", 4).highest_root().coords == (1, 1, 1, 1)


def test_affine_cartan_A2():
    assert build_affine_data("A", 2).affine_cartan == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]


def test_label_with_rank_suffix():
    assert build_affine_data("C3") == build_affine_data("C", 3)


@pytest.mark.parametrize("label,rank", [("E", 8), ("F", 4), ("A", 0), ("Q", 2)])
def test_unsupported(label, rank):
    with pytest.raises(UnsupportedType):
        build_affine_data(label, rank)
