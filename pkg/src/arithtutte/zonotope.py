"""Zonotopes of lattice lists: volume, exact lattice points, and the shifted strata.

The zonotope ``Z(X)`` is described by its facet inequalities, one pair per
primitive normal of a hyperplane spanned by a sublist.  Membership tests are
done on integer dot products, vectorized with numpy when the values fit in
int64 and on Python ints otherwise.

For the generic translate ``Z(X) - ε`` the shift is the formal vector
``ε = Σ_i δ^i x_σ(i)`` with ``δ`` a positive infinitesimal and ``σ`` a
perturbation order.  The sign of ``<ξ, ε>`` is the sign of the first
nonzero ``<ξ, x_σ(i)>``, so shifted membership never needs a numeric ε.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Sequence

import numpy as np

from .exceptions import PreconditionError
from .lattice import determinant, integer_kernel, matvec, rank, smith_normal_form
from .polynomial import BivariatePolynomial
from .tutte import CharacterList, multiplicity_of

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class Facet:
    """Normal ``ξ`` with ``-lower <= <ξ, p> <= upper`` on the zonotope."""

    normal: tuple[int, ...]
    upper: int
    lower: int


@dataclass(frozen=True)
class FacetSystem:
    facets: tuple[Facet, ...]

    def __len__(self):
        return len(self.facets)

    def contains(self, p: Sequence[int]) -> bool:
        for f in self.facets:
            v = sum(a * b for a, b in zip(f.normal, p))
            if not -f.lower <= v <= f.upper:
                return False
        return True


@dataclass(frozen=True)
class ZonotopeStratification:
    """``counts[k]`` shifted lattice points have a smallest face of codimension k."""

    counts: tuple[int, ...]
    total_in_Z: int
    volume: int

    def polynomial(self) -> BivariatePolynomial:
        return BivariatePolynomial({(k, 0): c for k, c in enumerate(self.counts)})

    def to_json(self) -> dict:
        return {"counts": list(self.counts), "volume": self.volume, "total": self.total_in_Z}


def _require_lattice(X: CharacterList, what: str) -> None:
    if not X.group.is_lattice():
        raise PreconditionError(f"{what} is defined for lists in a lattice (no torsion)")


def _require_full_rank(X: CharacterList, what: str) -> None:
    _require_lattice(X, what)
    if X.rank != X.group.free_rank:
        raise PreconditionError(f"{what} requires X to span the ambient space (r(X) = n)")


def volume(X: CharacterList) -> int:
    """Volume of ``Z(X)``: the sum of ``|det B|`` over the bases extracted from X."""
    _require_lattice(X, "the zonotope volume")
    n = X.group.free_rank
    vecs = X.free_vectors
    if X.rank < n:
        return 0
    return sum(abs(determinant([vecs[i] for i in B])) for B in combinations(range(len(vecs)), n))


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for a in v:
        g = gcd(g, a)
    v = [a // g for a in v]
    for a in v:
        if a:
            if a < 0:
                v = [-b for b in v]
            break
    return tuple(v)


def _facets(vecs: Sequence[tuple[int, ...]], n: int) -> tuple[Facet, ...]:
    distinct = sorted({v for v in vecs if any(v)})
    normals = set()
    for A in combinations(distinct, n - 1):
        if (rank([list(a) for a in A]) if A else 0) != n - 1:
            continue
        (xi,) = integer_kernel(A, n)
        normals.add(_primitive(xi))
    facets = []
    for xi in sorted(normals):
        dots = [sum(a * b for a, b in zip(xi, v)) for v in vecs]
        facets.append(Facet(xi, sum(d for d in dots if d > 0), -sum(d for d in dots if d < 0)))
    return tuple(facets)


def facet_system(X: CharacterList) -> FacetSystem:
    """Primitive normals of all hyperplanes spanned by sublists, with support values."""
    _require_lattice(X, "the facet system")
    n = X.group.free_rank
    if n == 0:
        return FacetSystem(())
    _require_full_rank(X, "the facet system")
    return FacetSystem(_facets(X.free_vectors, n))


def _scan(vecs, n, facets):
    """Lattice points of Z(vecs) in lexicographic order, with their facet dot products."""
    box = [(sum(min(0, v[i]) for v in vecs), sum(max(0, v[i]) for v in vecs)) for i in range(n)]
    bound = max((max(abs(lo), abs(hi)) for lo, hi in box), default=0)
    nbound = max((abs(a) for f in facets for a in f.normal), default=0)
    dtype = np.int64 if bound * nbound * max(n, 1) < _INT64_SAFE else object
    axes = [np.arange(lo, hi + 1, dtype=np.int64).astype(dtype) for lo, hi in box]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    N = np.array([f.normal for f in facets], dtype=dtype).reshape(len(facets), n)
    dots = grid @ N.T
    upper = np.array([f.upper for f in facets], dtype=dtype)
    lower = np.array([f.lower for f in facets], dtype=dtype)
    inside = np.all((dots <= upper) & (dots >= -lower), axis=1)
    return grid[inside], dots[inside], upper, lower


def lattice_points(X: CharacterList, return_points: bool = False):
    """Number of points of ``Z(X) ∩ Z^n``, optionally with the points themselves.

    Points are returned as integer tuples in lexicographic order.
    """
    _require_full_rank(X, "lattice point enumeration")
    n = X.group.free_rank
    if n == 0:
        return (1, [()]) if return_points else 1
    pts, _, _, _ = _scan(X.free_vectors, n, _facets(X.free_vectors, n))
    count = len(pts)
    if return_points:
        return count, [tuple(int(a) for a in p) for p in pts]
    return count


def interior_lattice_points(X: CharacterList) -> int:
    """Number of lattice points in the interior of ``Z(X)``."""
    _require_full_rank(X, "lattice point enumeration")
    n = X.group.free_rank
    if n == 0:
        return 1
    facets = _facets(X.free_vectors, n)
    _, dots, upper, lower = _scan(X.free_vectors, n, facets)
    return int(np.sum(np.all((dots < upper) & (dots > -lower), axis=1)))


def _epsilon_sign(normal, eps) -> int:
    for e in eps:
        d = sum(a * b for a, b in zip(normal, e))
        if d:
            return 1 if d > 0 else -1
    raise AssertionError(f"perturbation is orthogonal to facet normal {normal}")


def _shifted(vecs, n, eps) -> dict[tuple[int, ...], int]:
    """Points of ``(Z(vecs) - ε) ∩ Z^n`` mapped to the rank of their tight normals.

    ``ε`` is the formal vector ``Σ_i δ^i eps[i]``.
    """
    if n == 0:
        return {(): 0}
    facets = _facets(vecs, n)
    pts, dots, upper, lower = _scan(vecs, n, facets)
    signs = np.array([_epsilon_sign(f.normal, eps) for f in facets])
    tight_up = dots == upper
    tight_lo = dots == -lower
    # p + ε leaves Z through a tight facet unless ε points inward there
    ok = ~np.any((tight_up & (signs > 0)) | (tight_lo & (signs < 0)), axis=1)
    ranks: dict[tuple[int, ...], int] = {}
    out = {}
    for p, row in zip(pts[ok], (tight_up | tight_lo)[ok]):
        key = tuple(int(i) for i in np.flatnonzero(row))
        if key not in ranks:
            ranks[key] = rank([list(facets[i].normal) for i in key]) if key else 0
        out[tuple(int(a) for a in p)] = ranks[key]
    return out


def _straighten(lam: Sequence[int]) -> tuple[list[list[int]], int]:
    """Unimodular W and m > 0 with ``W @ lam == m * e_n``."""
    snf = smith_normal_form([[a] for a in lam])
    U = snf.U
    first = U[0]
    if sum(a * b for a, b in zip(first, lam)) < 0:
        first = [-a for a in first]
    return U[1:] + [first], snf.invariants[0]


def _strata(vecs, n, eps) -> dict[tuple[int, ...], int]:
    vecs = [v for v in vecs if any(v)]
    if n == 0:
        return {(): 0}
    S = _shifted(vecs, n, eps)
    if len(vecs) == n:
        # parallelepiped: the stratum of a point is the codimension of its face
        return S
    for i in range(len(vecs)):
        rest = vecs[:i] + vecs[i + 1:]
        if rank([list(v) for v in rest]) == n:
            break
    lam = vecs[i]
    first = _strata(rest, n, eps)
    W, m = _straighten(lam)

    def proj(v):
        return tuple(matvec(W, v)[:-1])

    second = _strata([proj(v) for v in rest], n - 1, [proj(e) for e in eps])
    out = dict(first)
    fibres: dict[tuple[int, ...], int] = {}
    for p in S:
        if p in first:
            continue
        u = proj(p)
        out[p] = second[u]
        fibres[u] = fibres.get(u, 0) + 1
    if len(out) != len(S) or sorted(fibres) != sorted(second) or set(fibres.values()) - {m}:
        raise AssertionError("deletion-restriction decomposition of the shifted zonotope failed")
    return out


def shifted_points(X: CharacterList, order: Sequence[int] | None = None) -> dict[tuple[int, ...], int]:
    """Lattice points of ``Z(X) - ε`` mapped to their stratum k.

    ``ε = Σ δ^i x_order[i]`` lies in the cone of X.  Strata come from
    deletion-restriction: pick the first element λ whose removal keeps full
    rank; points of ``Z(X∖λ) - ε`` keep their strata, and every other
    point projects along λ onto a point of the shifted zonotope of the
    quotient list and inherits its stratum, each fibre holding exactly
    ``m({λ})`` points.  For a parallelepiped the stratum is the codimension
    of the smallest face containing the point.
    """
    _require_full_rank(X, "the shifted zonotope")
    n = X.group.free_rank
    order = list(range(len(X))) if order is None else list(order)
    if sorted(order) != list(range(len(X))):
        raise ValueError("perturbation order must be a permutation of the list indices")
    vecs = X.free_vectors
    return _strata(vecs, n, [vecs[i] for i in order])


def face_codimension_counts(X: CharacterList, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Shifted lattice points counted by the codimension of their smallest face of ``Z(X)``.

    Agrees with :func:`stratification` for parallelepipeds, but not for
    general zonotopes in dimension 3 and up.
    """
    _require_full_rank(X, "the shifted zonotope")
    n = X.group.free_rank
    order = list(range(len(X))) if order is None else list(order)
    vecs = X.free_vectors
    counts = [0] * (n + 1)
    for k in _shifted([v for v in vecs if any(v)], n, [vecs[i] for i in order]).values():
        counts[k] += 1
    return tuple(counts)


def stratification(X: CharacterList, order: Sequence[int] | None = None) -> ZonotopeStratification:
    """Counts ``|I_0|, ..., |I_n|`` of shifted lattice points by stratum.

    Their generating polynomial is ``M_X(x, 1)`` and their sum is the volume.
    """
    n = X.group.free_rank
    counts = [0] * (n + 1)
    for k in shifted_points(X, order).values():
        counts[k] += 1
    return ZonotopeStratification(tuple(counts), lattice_points(X), volume(X))


def h_interior_counts(X: CharacterList) -> dict[tuple[int, ...], int]:
    """Interior lattice point counts ``h(A)`` of the faces ``Z(A)`` of a parallelepiped.

    Keys are sorted index tuples; values come from inclusion-exclusion on the
    multiplicities, ``h(A) = Σ_{B ⊆ A} (-1)^(|A|-|B|) m(B)``.
    """
    _require_lattice(X, "interior counts")
    if X.rank != len(X) or X.has_free_zero():
        raise PreconditionError("interior counts need a linearly independent list")
    idx = range(len(X))
    m = {B: multiplicity_of(X, B) for k in range(len(X) + 1) for B in combinations(idx, k)}
    h = {}
    for A in m:
        h[A] = sum(
            (-1) ** (len(A) - k) * m[B] for k in range(len(A) + 1) for B in combinations(A, k)
        )
    return h
