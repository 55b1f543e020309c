"""Hilbert series of the discrete Dahmen-Micchelli space of a lattice list."""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import PreconditionError
from .polynomial import _render
from .toric import Layer, arrangement_points
from .tutte import CharacterList, m_tutte_expansion, ordinary_tutte


@dataclass(frozen=True)
class HilbertSeries:
    """Graded dimensions, lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(a) for a in c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def total(self) -> int:
        return sum(self.coefficients)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        n = max(len(self.coefficients), len(other.coefficients))
        pad = lambda c: list(c) + [0] * (n - len(c))  # noqa: E731
        return HilbertSeries(tuple(a + b for a, b in zip(pad(self.coefficients), pad(other.coefficients))))

    def __str__(self):
        """``c0 + c1*y + c2*y^2``, ascending."""
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append((c, "" if k == 0 else ("y" if k == 1 else f"y^{k}")))
        return _render(terms)

    def to_json(self) -> list[int]:
        return list(self.coefficients)


def _require(X: CharacterList) -> None:
    if not X.group.is_lattice():
        raise PreconditionError("the Dahmen-Micchelli space is defined for a list in a lattice")
    if X.rank != X.group.free_rank:
        raise PreconditionError("the Dahmen-Micchelli space needs X to span the ambient space (r(X) = n)")


def _series_of(P) -> HilbertSeries:
    return HilbertSeries(tuple(P.coeffs))


def dm_hilbert_series(X: CharacterList) -> HilbertSeries:
    """``M_X(1, y)``."""
    _require(X)
    return _series_of(m_tutte_expansion(X).at_x(1))


def dm_decomposition_check(X: CharacterList) -> tuple[HilbertSeries, list[tuple[Layer, HilbertSeries]]]:
    """Sum of ``T_{X_p}(1, y)`` over the points p of the toric arrangement.

    Returns the total and the per-point summands, and raises AssertionError
    if the total differs from :func:`dm_hilbert_series`.
    """
    _require(X)
    summands = []
    total = HilbertSeries(())
    for p in arrangement_points(X):
        s = _series_of(ordinary_tutte(X.sublist(p.support)).at_x(1))
        summands.append((p, s))
        total = total + s
    expected = dm_hilbert_series(X)
    if total != expected:
        raise AssertionError(f"point decomposition gives {total}, expected {expected}")
    return total, summands


def dm_dimension(X: CharacterList) -> int:
    """Dimension of the space: the sum of the series coefficients."""
    return dm_hilbert_series(X).total()
