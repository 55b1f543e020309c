"""Multiplicity Tutte polynomial of a list in a finitely generated abelian group.

Two independent routes to ``M_X(x, y)`` are provided:

* :func:`m_tutte_expansion` sums ``m(A) (x-1)^(r(X)-r(A)) (y-1)^(|A|-r(A))``
  over all sublists, and is the reference.
* :func:`m_tutte_recursive` applies deletion-restriction, quotienting the
  ambient group by the pivot element, until only an independent part and
  elements with zero free part remain.

The ordinary Tutte polynomial, basis activities and the central hyperplane
arrangement specializations live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Iterable, Iterator, Sequence

from .exceptions import DimensionMismatchError, PreconditionError
from .lattice import (
    FgGroup,
    GroupElement,
    _relation_matrix,
    matvec,
    normalize_torsion,
    quotient_by,
    rank,
    smith_normal_form,
)
from .polynomial import BivariatePolynomial, UnivariatePolynomial


@dataclass(frozen=True)
class CharacterList:
    """An ordered list of elements of ``group``; repeats and zeros allowed."""

    group: FgGroup
    elems: tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(self.elems))
        for g in self.elems:
            self.group.check(g)

    @classmethod
    def from_vectors(
        cls,
        vectors: Iterable[Sequence[int]],
        free_rank: int | None = None,
        torsion: Sequence[int] = (),
    ) -> "CharacterList":
        """Build a list from coordinate vectors (free part, then torsion residues).

        With ``free_rank`` omitted the ambient group is the lattice whose rank
        is the common length of the vectors.
        """
        vectors = [tuple(int(c) for c in v) for v in vectors]
        if free_rank is None:
            if torsion:
                raise ValueError("free_rank must be given together with torsion")
            lengths = {len(v) for v in vectors}
            if len(lengths) > 1:
                raise DimensionMismatchError(f"vectors of different lengths {sorted(lengths)}")
            free_rank = lengths.pop() if lengths else 0
        G = FgGroup(free_rank, tuple(torsion))
        return cls(G, tuple(G.element(v) for v in vectors))

    def __len__(self):
        return len(self.elems)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    @property
    def free_vectors(self) -> list[tuple[int, ...]]:
        return [g.free for g in self.elems]

    @property
    def rank(self) -> int:
        return _free_rank([g.free for g in self.elems])

    def sublist(self, indices: Iterable[int]) -> "CharacterList":
        return CharacterList(self.group, tuple(self.elems[i] for i in indices))

    def permuted(self, order: Sequence[int]) -> "CharacterList":
        if sorted(order) != list(range(len(self))):
            raise ValueError("not a permutation")
        return self.sublist(order)

    def transformed(self, U: Sequence[Sequence[int]]) -> "CharacterList":
        """Apply an integer matrix to the free part of every element."""
        return CharacterList(
            self.group,
            tuple(GroupElement(tuple(matvec(U, g.free)), g.tors) for g in self.elems),
        )

    def has_zero(self) -> bool:
        return any(g.is_zero() for g in self.elems)

    def has_free_zero(self) -> bool:
        """True when some element has zero projection to the free part."""
        return any(not any(g.free) for g in self.elems)


def _free_rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [list(v) for v in vectors if any(v)]
    return rank(rows) if rows else 0


def _rank_and_multiplicity(G: FgGroup, A: Sequence[GroupElement]) -> tuple[int, int]:
    rows = _relation_matrix(G, A)
    if not rows:
        return 0, 1
    snf = smith_normal_form(rows, G.ncoords)
    return snf.rank - len(G.torsion), prod(snf.invariants)


def subset_statistics(X: CharacterList, weighted: bool = True) -> dict[tuple[int, int], int]:
    """Map ``(r(A), |A|)`` to the sum of ``m(A)`` (or of 1) over sublists A."""
    stats: dict[tuple[int, int], int] = {}
    elems = X.elems
    G = X.group
    for size in range(len(elems) + 1):
        for A in combinations(elems, size):
            if weighted:
                r, m = _rank_and_multiplicity(G, A)
            else:
                r, m = _free_rank([g.free for g in A]), 1
            stats[(r, size)] = stats.get((r, size), 0) + m
    return stats


def _shifted_binomial(e: int) -> dict[int, int]:
    """Coefficients of ``(t - 1)^e``."""
    return {k: comb(e, k) * (-1) ** (e - k) for k in range(e + 1)}


def polynomial_from_statistics(stats: dict[tuple[int, int], int], total_rank: int) -> BivariatePolynomial:
    coeffs: dict[tuple[int, int], int] = {}
    for (r, size), m in stats.items():
        for i, a in _shifted_binomial(total_rank - r).items():
            for j, b in _shifted_binomial(size - r).items():
                coeffs[(i, j)] = coeffs.get((i, j), 0) + m * a * b
    return BivariatePolynomial(coeffs)


def m_tutte_expansion(X: CharacterList) -> BivariatePolynomial:
    """``M_X(x, y)`` as the sum over all ``2^|X|`` sublists."""
    return polynomial_from_statistics(subset_statistics(X), X.rank)


def ordinary_tutte(X: CharacterList) -> BivariatePolynomial:
    """Tutte polynomial of the matroid of the free parts of X."""
    return polynomial_from_statistics(subset_statistics(X, weighted=False), X.rank)


def _recursive(G: FgGroup, elems: tuple[GroupElement, ...], memo: dict) -> BivariatePolynomial:
    key = (G, tuple(sorted(g.coords for g in elems)))
    hit = memo.get(key)
    if hit is not None:
        return hit
    frees = [g.free for g in elems]
    total = _free_rank(frees)
    pivot = None
    for i, g in enumerate(elems):
        if any(g.free) and _free_rank(frees[:i] + frees[i + 1:]) == total:
            pivot = i
            break
    if pivot is None:
        zeros = sum(1 for g in elems if g.is_zero())
        rest = CharacterList(G, tuple(g for g in elems if not g.is_zero()))
        result = BivariatePolynomial.monomial(0, zeros) * m_tutte_expansion(rest)
    else:
        lam = elems[pivot]
        rest = elems[:pivot] + elems[pivot + 1:]
        G2, project = quotient_by(G, lam)
        restricted = tuple(project(g) for g in rest)
        result = _recursive(G, rest, memo) + _recursive(G2, restricted, memo)
    memo[key] = result
    return result


def m_tutte_recursive(X: CharacterList) -> BivariatePolynomial:
    """``M_X(x, y)`` by deletion-restriction.

    The pivot is the first element whose free part is nonzero and lies in the
    real span of the other free parts.  Deletion keeps the group; restriction
    passes to ``Γ/<λ>``.  Subproblems are memoized on the group and the
    multiset of coordinates.  Lists with no admissible pivot consist of an
    independent part, exact zeros (a factor ``y`` each) and elements with
    zero free part but nonzero torsion; the latter two are evaluated by the
    defining sum.
    """
    return _recursive(X.group, X.elems, {})


def evaluate(P, x0, y0=None):
    """Exact value of a polynomial at rational arguments.

    ``P`` is bivariate (pass ``x0`` and ``y0``) or univariate (pass ``x0``).
    """
    if isinstance(P, UnivariatePolynomial):
        return P(Fraction(x0))
    return P.evaluate(Fraction(x0), Fraction(y0))


def multiplicity_of(X: CharacterList, indices: Iterable[int]) -> int:
    return _rank_and_multiplicity(X.group, [X.elems[i] for i in indices])[1]


def bases(X: CharacterList) -> list[tuple[int, ...]]:
    """Index tuples of the sublists whose free parts form a basis of the span."""
    frees = X.free_vectors
    r = X.rank
    return [B for B in combinations(range(len(X)), r) if _free_rank([frees[i] for i in B]) == r]


def is_unimodular(X: CharacterList) -> bool:
    return all(multiplicity_of(X, B) == 1 for B in bases(X))


@dataclass(frozen=True)
class ActivityRecord:
    """A basis (0-based indices into the list) with its internal and external activity."""

    basis: tuple[int, ...]
    internal: int
    external: int


def activities(X: CharacterList) -> list[ActivityRecord]:
    """Internal and external activity of every basis, for the list order of X.

    ``v`` outside B is externally active when it lies in the span of the
    elements of B strictly after it; ``v`` in B is internally active when no
    earlier element can replace it in B.  A zero element is the empty
    combination, so it is externally active for every basis.
    """
    frees = X.free_vectors
    r = X.rank
    all_bases = bases(X)
    basis_set = set(all_bases)
    records = []
    for B in all_bases:
        inB = set(B)
        ext = 0
        for v in range(len(X)):
            if v in inB:
                continue
            later = [frees[b] for b in B if b > v]
            if _free_rank(later + [frees[v]]) == _free_rank(later):
                ext += 1
        internal = 0
        for v in B:
            others = [b for b in B if b != v]
            if not any(
                tuple(sorted(others + [w])) in basis_set for w in range(v) if w not in inB
            ):
                internal += 1
        records.append(ActivityRecord(B, internal, ext))
    assert all(0 <= rec.internal <= r for rec in records)
    return records


def activity_polynomial(records: Iterable[ActivityRecord]) -> BivariatePolynomial:
    """``Σ_B x^i(B) y^e(B)``."""
    total = BivariatePolynomial()
    for rec in records:
        total = total + BivariatePolynomial.monomial(rec.internal, rec.external)
    return total


def nbc_count(X: CharacterList) -> int:
    """Number of no-broken-circuit bases (external activity zero)."""
    return sum(1 for rec in activities(X) if rec.external == 0)


@dataclass(frozen=True)
class HyperplaneInvariants:
    characteristic: UnivariatePolynomial
    chambers: int
    poincare: UnivariatePolynomial


def _require_no_free_zero(X: CharacterList, what: str) -> None:
    if X.has_free_zero():
        raise PreconditionError(f"{what} requires a list that does not contain 0")


def hyperplane_char_poly(X: CharacterList) -> HyperplaneInvariants:
    """Characteristic polynomial ``(-1)^r T_X(1-q, 0)`` of the real central arrangement.

    Also returns the chamber count ``(-1)^r χ(-1)`` and the Poincaré
    polynomial ``(-q)^r χ(-1/q)`` of the complexified complement, with
    ``r = r(X)``.
    """
    if not X.group.is_lattice():
        raise PreconditionError("hyperplane arrangements need a lattice ambient group")
    _require_no_free_zero(X, "the hyperplane characteristic polynomial")
    r = X.rank
    T = ordinary_tutte(X)
    q = UnivariatePolynomial.gen("q")
    chi = (-1) ** r * T.evaluate(1 - q, 0)
    if not isinstance(chi, UnivariatePolynomial):
        chi = UnivariatePolynomial((chi,), "q")
    chambers = (-1) ** r * chi(-1)
    poincare = UnivariatePolynomial.from_dict(
        {r - k: a * (-1) ** (r + k) for k, a in enumerate(chi.coeffs)}, "q"
    )
    return HyperplaneInvariants(chi, chambers, poincare)


def direct_sum(X1: CharacterList, X2: CharacterList) -> CharacterList:
    """Concatenation of X1 and X2 embedded block-diagonally in the product group."""
    G1, G2 = X1.group, X2.group
    n1, n2 = G1.free_rank, G2.free_rank
    Gt, project = normalize_torsion(G1.torsion + G2.torsion)
    G = FgGroup(n1 + n2, Gt.torsion)
    z1, z2 = (0,) * len(G1.torsion), (0,) * len(G2.torsion)
    elems = [GroupElement(g.free + (0,) * n2, project(g.tors + z2)) for g in X1.elems]
    elems += [GroupElement((0,) * n1 + g.free, project(z1 + g.tors)) for g in X2.elems]
    return CharacterList(G, tuple(elems))
