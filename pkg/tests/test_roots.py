import pytest

from arithtutte import CharacterList
from arithtutte.roots import cartan_matrix, positive_roots, root_system, weyl_check, weyl_order
from arithtutte.tutte import m_tutte_expansion

CASES = [("A", 1, 2), ("A", 2, 6), ("A", 3, 24), ("A", 4, 120), ("B", 2, 8), ("B", 3, 48),
         ("C", 2, 8), ("C", 3, 48), ("D", 4, 192)]
ROOT_COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n, "D": lambda n: n * (n - 1)}


def test_small_realizations():
    assert positive_roots("A", 1).free_vectors == [(2,)]
    assert sorted(positive_roots("A", 2).free_vectors) == sorted([(2, -1), (-1, 2), (1, 1)])
    assert len(positive_roots("C", 2)) == 4


def test_cartan():
    assert cartan_matrix("A", 2) == [[2, -1], [-1, 2]]
    assert cartan_matrix("C", 2) == [[2, -2], [-1, 2]]
    assert cartan_matrix("B", 2) == [[2, -1], [-2, 2]]


@pytest.mark.parametrize("family,n,order", CASES)
def test_weyl_orders(family, n, order):
    assert weyl_order(family, n) == order
    spec = root_system(family, n)
    assert len(spec.realization) == ROOT_COUNTS[family](n)
    assert weyl_check(family, n) == (order, order, True)


def test_c2_matches_example_list():
    exa_list = CharacterList.from_vectors([(2, 0), (0, 2), (1, 1), (1, -1)])
    assert m_tutte_expansion(positive_roots("C", 2)) == m_tutte_expansion(exa_list)


@pytest.mark.parametrize("family,n", [("E", 6), ("A", 0), ("B", 1), ("D", 2)])
def test_unsupported(family, n):
    with pytest.raises(ValueError):
        positive_roots(family, n)
