"""Layers of the toric arrangement of a list of characters.

A character ``χ = (a, r)`` of ``Γ = Z^n × ⊕ Z/q_i`` is a function on the
torus ``T = Hom(Γ, C*)``.  A point of T is written in angle coordinates
``(θ, s)`` with ``θ ∈ (R/Z)^n`` and ``s`` a residue vector naming one of the
``|Γ_t|`` connected components of T; then

    χ(θ, s) = exp(2πi (<a, θ> + Σ_i r_i s_i / q_i)).

For a sublist A, ``H_A`` is the common kernel.  Its components are found
from the Smith form ``U A V = D`` of the free parts: substituting ``θ = Vφ``
decouples the congruences into ``d_i φ_i ≡ (U b)_i (mod 1)``.

A layer is stored canonically as (component, direction lattice in Hermite
form, basepoint).  The basepoint is the representative of ``θ`` modulo
``Z^n + span_R(direction)`` obtained by sliding along the direction until
the Hermite pivot coordinates vanish, then reducing modulo the projected
integer lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import floor, lcm
from typing import Sequence

from .exceptions import PreconditionError
from .lattice import hermite_basis, hermite_normal_form, identity, rank, smith_normal_form, transpose
from .polynomial import UnivariatePolynomial
from .tutte import CharacterList, m_tutte_expansion, nbc_count, subset_statistics

Basepoint = tuple[Fraction, ...]


@dataclass(frozen=True)
class Layer:
    """A connected component of some ``H_A``.

    ``support`` lists the indices of all characters vanishing on the layer;
    it is not part of the identity of the layer.
    """

    component: tuple[int, ...]
    direction: tuple[tuple[int, ...], ...]
    basepoint: Basepoint
    support: tuple[int, ...] = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.direction)

    @property
    def key(self):
        return (self.component, self.direction, self.basepoint)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "component": list(self.component),
            "direction": [list(v) for v in self.direction],
            "basepoint": [str(c) for c in self.basepoint],
            "support": list(self.support),
        }


class _DirectionQuotient:
    """Canonical representatives of ``R^n / (Z^n + span_R D)``."""

    def __init__(self, direction: tuple[tuple[int, ...], ...], n: int):
        self.rows = direction
        self.pivots = [next(i for i, a in enumerate(h) if a) for h in direction]
        proj = [self._slide([Fraction(int(i == j)) for j in range(n)]) for i in range(n)]
        self.scale = lcm(1, *(c.denominator for v in proj for c in v))
        H, _ = hermite_normal_form([[int(c * self.scale) for c in v] for v in proj])
        self.reducer = [(next(i for i, a in enumerate(g) if a), g) for g in H if any(g)]

    def _slide(self, theta: list[Fraction]) -> list[Fraction]:
        for p, h in zip(self.pivots, self.rows):
            t = theta[p] / h[p]
            if t:
                theta = [a - t * b for a, b in zip(theta, h)]
        return theta

    def canonical(self, theta: Sequence[Fraction]) -> Basepoint:
        x = [c * self.scale for c in self._slide([Fraction(c) for c in theta])]
        for c, g in self.reducer:
            f = floor(x[c] / g[c])
            if f:
                x = [a - f * b for a, b in zip(x, g)]
        return tuple(a / self.scale for a in x)


@lru_cache(maxsize=4096)
def _quotient(direction: tuple[tuple[int, ...], ...], n: int) -> _DirectionQuotient:
    return _DirectionQuotient(direction, n)


def _char_offsets(X: CharacterList, s: Sequence[int]) -> list[Fraction]:
    """``Σ_i r_i s_i / q_i`` for every character, at torsion component s."""
    qs = X.group.torsion
    return [sum((Fraction(r * t, q) for r, t, q in zip(g.tors, s, qs)), Fraction(0)) for g in X.elems]


def components_of(X: CharacterList, A: Sequence[int]) -> list[Layer]:
    """The connected components of ``H_A`` (support left empty)."""
    G = X.group
    n = G.free_rank
    rows = [list(X.elems[i].free) for i in A]
    if rows and n:
        snf = smith_normal_form(rows, n)
        r = snf.rank
        Vt = transpose(snf.V)
        direction = hermite_basis(Vt[r:])
        solve_rows = snf.U
        invs = snf.invariants
    else:
        r = 0
        direction = tuple(tuple(v) for v in identity(n))
        solve_rows = identity(len(rows))
        Vt, invs = [], ()
    Q = _quotient(direction, n)
    out = []
    for s in G.elements_of_torsion():
        offsets = _char_offsets(X, s)
        b = [-offsets[i] for i in A]
        Ub = [sum((u * c for u, c in zip(row, b)), Fraction(0)) for row in solve_rows]
        if any(c.denominator != 1 for c in Ub[r:]):
            continue
        for ks in product(*(range(d) for d in invs)):
            theta = [Fraction(0)] * n
            for i, (d, k) in enumerate(zip(invs, ks)):
                phi = (Ub[i] + k) / d
                theta = [a + phi * v for a, v in zip(theta, Vt[i])]
            out.append(Layer(tuple(s), direction, Q.canonical(theta)))
    return out


def _vanishes(X: CharacterList, i: int, layer: Layer) -> bool:
    g = X.elems[i]
    if any(sum(a * b for a, b in zip(g.free, h)) for h in layer.direction):
        return False
    qs = X.group.torsion
    val = sum((a * t for a, t in zip(g.free, layer.basepoint)), Fraction(0))
    val += sum((Fraction(r * t, q) for r, t, q in zip(g.tors, layer.component, qs)), Fraction(0))
    return val.denominator == 1


def _contains(big: Layer, small: Layer, n: int) -> bool:
    """True when ``small ⊆ big`` as subsets of the torus."""
    if big.component != small.component or small.dim > big.dim:
        return False
    if small.dim and rank([list(v) for v in big.direction + small.direction]) != big.dim:
        return False
    return _quotient(big.direction, n).canonical(small.basepoint) == big.basepoint


def _sort_key(layer: Layer):
    return (-layer.dim, layer.basepoint, layer.component, layer.direction)


@dataclass
class LayerPoset:
    """The layers of X ordered by reverse inclusion, with Möbius values.

    ``below[j]`` holds the indices of the layers strictly containing layer
    j, that is the elements strictly below it in the poset.  ``defining``
    maps each layer index to the sublists A having it as a component of
    ``H_A``.
    """

    X: CharacterList
    layers: tuple[Layer, ...]
    below: tuple[frozenset[int], ...]
    defining: dict[int, tuple[tuple[int, ...], ...]]
    mobius: dict[int, int]

    def __len__(self):
        return len(self.layers)

    def index(self, layer: Layer) -> int:
        for i, L in enumerate(self.layers):
            if L == layer:
                return i
        raise KeyError(layer)

    def leq(self, i: int, j: int) -> bool:
        """``C_i <= C_j`` in the poset, i.e. ``C_i ⊇ C_j``."""
        return i == j or i in self.below[j]

    def ambient(self, i: int) -> int:
        """Index of ``T_C``, the component of the torus containing layer i."""
        comp = self.layers[i].component
        n = self.X.group.free_rank
        return next(j for j, L in enumerate(self.layers) if L.dim == n and L.component == comp)

    def points(self) -> list[Layer]:
        return [L for L in self.layers if L.dim == 0]

    def of_dim(self, k: int) -> list[Layer]:
        return [L for L in self.layers if L.dim == k]

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``C_i < C_j`` and nothing strictly between."""
        out = []
        for j, lower in enumerate(self.below):
            for i in lower:
                if not any(i in self.below[k] for k in lower):
                    out.append((i, j))
        return sorted(out)

    def alternating_mobius(self) -> dict[int, int]:
        """``Σ_{A ∈ D(C)} (-1)^|A|``, an independent formula for ``μ(T_C, C)``."""
        return {i: sum((-1) ** len(A) for A in D) for i, D in self.defining.items()}

    def to_json(self) -> dict:
        layers = []
        for i, L in enumerate(self.layers):
            d = L.to_json()
            d["mobius"] = self.mobius[i]
            layers.append(d)
        return {
            "free_rank": self.X.group.free_rank,
            "torsion": list(self.X.group.torsion),
            "layers": layers,
            "covers": [list(c) for c in self.covers()],
        }


def enumerate_layers(X: CharacterList) -> LayerPoset:
    """All layers of the arrangement of X, from the components of every ``H_A``."""
    n = X.group.free_rank
    found: dict[tuple, Layer] = {}
    defining: dict[tuple, list[tuple[int, ...]]] = {}
    for size in range(len(X) + 1):
        for A in combinations(range(len(X)), size):
            for L in components_of(X, A):
                found.setdefault(L.key, L)
                defining.setdefault(L.key, []).append(A)
    layers = []
    for L in found.values():
        support = tuple(i for i in range(len(X)) if _vanishes(X, i, L))
        layers.append(Layer(L.component, L.direction, L.basepoint, support))
    layers.sort(key=_sort_key)
    below = []
    for j, small in enumerate(layers):
        below.append(
            frozenset(
                i
                for i, big in enumerate(layers)
                if i != j and big.dim > small.dim and _contains(big, small, n)
            )
        )
    mob: dict[int, int] = {}
    for j in range(len(layers)):  # sorted by dim descending, so predecessors come first
        mob[j] = 1 if not below[j] else -sum(mob[i] for i in below[j])
    return LayerPoset(
        X,
        tuple(layers),
        tuple(below),
        {i: tuple(defining[L.key]) for i, L in enumerate(layers)},
        mob,
    )


def mobius(P: LayerPoset) -> dict[Layer, int]:
    """``μ(T_C, C)`` for every layer C, from the defining recursion."""
    return {P.layers[i]: m for i, m in P.mobius.items()}


def _require_characters(X: CharacterList, what: str) -> None:
    if any(not any(g.free) for g in X.elems):
        raise PreconditionError(
            f"{what} assumes X does not contain 0; every character needs a nonzero "
            "free part so that its kernel is a hypersurface"
        )


def characteristic_polynomial(P: LayerPoset) -> UnivariatePolynomial:
    """``χ(q) = Σ_C μ(T_C, C) q^dim(C)``."""
    _require_characters(P.X, "the characteristic polynomial")
    c: dict[int, int] = {}
    for i, L in enumerate(P.layers):
        c[L.dim] = c.get(L.dim, 0) + P.mobius[i]
    return UnivariatePolynomial.from_dict(c, "q")


def _q_binomial_product(a: int, b: int) -> UnivariatePolynomial:
    """``(q + 1)^a q^b``."""
    q = UnivariatePolynomial.gen("q")
    return (q + 1) ** a * q**b


def poincare_from_expansion(X: CharacterList) -> UnivariatePolynomial:
    """``Σ_A m(A) (q+1)^(n-r(A)) q^r(A) (-1)^(|A|-r(A))``."""
    n = X.group.free_rank
    total = UnivariatePolynomial((), "q")
    for (r, size), m in subset_statistics(X).items():
        total = total + (-1) ** (size - r) * m * _q_binomial_product(n - r, r)
    return total


def poincare_from_layers(P: LayerPoset) -> UnivariatePolynomial:
    """``Σ_C nbc(X_C) (q+1)^dim(C) q^(n-dim(C))`` over the poset."""
    X = P.X
    n = X.group.free_rank
    total = UnivariatePolynomial((), "q")
    for L in P.layers:
        k = nbc_count(X.sublist(L.support))
        total = total + k * _q_binomial_product(L.dim, n - L.dim)
    return total


def poincare_from_characteristic(chi: UnivariatePolynomial, n: int) -> UnivariatePolynomial:
    """``(-q)^n χ(-(q+1)/q)``."""
    total = UnivariatePolynomial((), "q")
    for k, c in enumerate(chi.coeffs):
        total = total + c * (-1) ** (n + k) * _q_binomial_product(k, n - k)
    return total


def poincare_from_m_tutte(X: CharacterList) -> UnivariatePolynomial:
    """``(q+1)^(n-r) q^r M_X((2q+1)/q, 0)`` with ``r = r(X)``; for r = n this is ``q^n M_X((2q+1)/q, 0)``."""
    n, r = X.group.free_rank, X.rank
    q = UnivariatePolynomial.gen("q")
    total = UnivariatePolynomial((), "q")
    for i, c in enumerate(m_tutte_expansion(X).at_y(0).coeffs):
        total = total + c * (2 * q + 1) ** i * q ** (r - i)
    return total * (q + 1) ** (n - r)


def characteristic_from_m_tutte(X: CharacterList) -> UnivariatePolynomial:
    """``q^(n-r) (-1)^r M_X(1-q, 0)`` with ``r = r(X)``; for r = n this is ``(-1)^n M_X(1-q, 0)``."""
    n, r = X.group.free_rank, X.rank
    q = UnivariatePolynomial.gen("q")
    chi = (-1) ** r * m_tutte_expansion(X).evaluate(1 - q, 0)
    if not isinstance(chi, UnivariatePolynomial):
        chi = UnivariatePolynomial((chi,), "q")
    return chi * q ** (n - r)


def poincare_polynomial(X: CharacterList, verify: bool = False) -> UnivariatePolynomial:
    """Poincaré polynomial of the complement of the arrangement.

    Computed by the closed subset expansion.  With ``verify`` it is
    recomputed from the layer poset, from χ and from ``M_X``; any
    disagreement raises AssertionError.
    """
    _require_characters(X, "the Poincaré polynomial")
    P = poincare_from_expansion(X)
    if verify:
        poset = enumerate_layers(X)
        n = X.group.free_rank
        routes = {
            "layers": poincare_from_layers(poset),
            "characteristic": poincare_from_characteristic(characteristic_polynomial(poset), n),
            "m_tutte": poincare_from_m_tutte(X),
        }
        for name, other in routes.items():
            if other != P:
                raise AssertionError(f"Poincaré polynomial via {name} gives {other}, expected {P}")
    return P


def euler_characteristic(X: CharacterList) -> int:
    """``(-1)^n M_X(1, 0)``."""
    _require_characters(X, "the Euler characteristic")
    return (-1) ** X.group.free_rank * m_tutte_expansion(X).evaluate(1, 0)


def compact_regions(X: CharacterList) -> int:
    """Number of regions cut out in the compact torus ``(S^1)^n``: ``M_X(1, 0)``."""
    if not X.group.is_lattice():
        raise PreconditionError("compact regions are counted for a lattice ambient group")
    _require_characters(X, "the compact region count")
    return m_tutte_expansion(X).evaluate(1, 0)


def sublist_at_layer(X: CharacterList, C: Layer) -> CharacterList:
    """``X_C``: the characters vanishing on C.

    Raises ValueError when C is not a layer of the arrangement of X.
    """
    n = X.group.free_rank
    if len(C.basepoint) != n or len(C.component) != len(X.group.torsion):
        raise ValueError("layer does not live in the torus of this list")
    support = [i for i in range(len(X)) if _vanishes(X, i, C)]
    if C not in components_of(X, support):
        raise ValueError("not a layer of the arrangement of this list")
    return X.sublist(support)


def arrangement_points(X: CharacterList) -> list[Layer]:
    """The zero-dimensional layers, each with its support ``X_p``."""
    n = X.group.free_rank
    found: dict[tuple, Layer] = {}
    for A in combinations(range(len(X)), n):
        if rank([list(X.elems[i].free) for i in A]) != n:
            continue
        for L in components_of(X, A):
            found.setdefault(L.key, L)
    pts = [
        Layer(L.component, L.direction, L.basepoint, tuple(i for i in range(len(X)) if _vanishes(X, i, L)))
        for L in found.values()
    ]
    return sorted(pts, key=_sort_key)
