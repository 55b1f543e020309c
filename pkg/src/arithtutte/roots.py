"""Positive roots of classical root systems as lists in the cocharacter lattice.

A positive root with simple-root coordinates c is recorded as the vector of
pairings ``(<α, α_i^∨>)_i = K c`` where ``K[i][j] = 2(α_i, α_j)/(α_i, α_i)`` is
built from a Euclidean realization of the simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .lattice import matvec
from .tutte import CharacterList, m_tutte_expansion


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def _simple_roots(family: str, n: int) -> list[list[int]]:
    """Euclidean simple roots (integer coordinates)."""
    if family == "A":
        return [[a - b for a, b in zip(_unit(n + 1, i), _unit(n + 1, i + 1))] for i in range(n)]
    chain = [[a - b for a, b in zip(_unit(n, i), _unit(n, i + 1))] for i in range(n - 1)]
    if family == "B":
        return chain + [_unit(n, n - 1)]
    if family == "C":
        return chain + [_unit(n, n - 1, 2)]
    if family == "D":
        last = _unit(n, n - 2)
        last[n - 1] = 1
        return chain + [last]
    raise ValueError(f"unsupported root system family {family!r}")


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def cartan_matrix(family: str, n: int) -> list[list[int]]:
    family = family.upper()
    if family not in _MIN_RANK or n < _MIN_RANK[family]:
        raise ValueError(f"unsupported root system {family}_{n}")
    S = _simple_roots(family, n)
    dot = lambda u, v: sum(a * b for a, b in zip(u, v))  # noqa: E731
    return [[2 * dot(S[i], S[j]) // dot(S[i], S[i]) for j in range(n)] for i in range(n)]


def weyl_order(family: str, n: int) -> int:
    family = family.upper()
    if family not in _MIN_RANK or n < _MIN_RANK[family]:
        raise ValueError(f"unsupported root system {family}_{n}")
    if family == "A":
        return factorial(n + 1)
    if family in "BC":
        return 2**n * factorial(n)
    return 2 ** (n - 1) * factorial(n)


def positive_root_coordinates(family: str, n: int) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by height, via root strings."""
    K = cartan_matrix(family, n)
    simple = [tuple(_unit(n, i)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            pairing = matvec(K, beta)  # <β, α_i^∨>
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        nxt.sort()
        ordered.extend(nxt)
        layer = nxt
    return ordered


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_coordinates: tuple[tuple[int, ...], ...]
    realization: CharacterList
    weyl_order: int


def root_system(family: str, n: int) -> RootSystemSpec:
    family = family.upper()
    K = cartan_matrix(family, n)
    coords = positive_root_coordinates(family, n)
    X = CharacterList.from_vectors([matvec(K, c) for c in coords], n)
    return RootSystemSpec(
        family, n, tuple(map(tuple, K)), tuple(coords), X, weyl_order(family, n)
    )


def positive_roots(family: str, n: int) -> CharacterList:
    """The positive roots of ``family_n`` as vectors of pairings with the simple coroots."""
    return root_system(family, n).realization


def weyl_check(family: str, n: int) -> tuple[int, int, bool]:
    """``(M_X(1, 0), |W|, equal)`` for the positive roots of ``family_n``."""
    spec = root_system(family, n)
    value = m_tutte_expansion(spec.realization).evaluate(1, 0)
    return value, spec.weyl_order, value == spec.weyl_order
