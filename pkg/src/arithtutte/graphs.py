"""Multiplicity Tutte polynomials of graphs with positive integer edge labels.

A labeled edge e of multiplicity ``m_e`` stands for ``m_e`` parallel edges
of the expanded multigraph ``G_m``, and a set of edges A has multiplicity
``∏_{e ∈ A} m_e``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Sequence

from .exceptions import PreconditionError
from .polynomial import BivariatePolynomial
from .tutte import CharacterList, polynomial_from_statistics


@dataclass(frozen=True)
class LabeledGraph:
    """Vertices ``0..vertices-1``; edges ``(u, v, m)``; loops and parallel edges allowed."""

    vertices: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        edges = []
        for e in self.edges:
            if len(e) == 2:
                u, v, m = e[0], e[1], 1
            elif len(e) == 3:
                u, v, m = e
            else:
                raise ValueError(f"edge {e!r} must be [u, v] or [u, v, m]")
            u, v, m = int(u), int(v), int(m)
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge {e!r} has an endpoint outside 0..{self.vertices - 1}")
            if m < 1:
                raise ValueError(f"edge label {m} must be a positive integer")
            edges.append((u, v, m))
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def from_json(cls, data) -> "LabeledGraph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["vertices"]), tuple(tuple(e) for e in data.get("edges", ())))

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": [list(e) for e in self.edges]}

    def rank(self, edge_indices: Sequence[int] | None = None) -> int:
        """``|V| - c(A)`` for the spanning subgraph on the given edges."""
        idx = range(len(self.edges)) if edge_indices is None else edge_indices
        return sum(1 for _ in _tree_edges(self.vertices, (self.edges[i] for i in idx)))

    def is_connected(self) -> bool:
        return self.rank() == max(self.vertices - 1, 0)

    def without(self, i: int) -> "LabeledGraph":
        return LabeledGraph(self.vertices, self.edges[:i] + self.edges[i + 1:])

    def contract(self, i: int) -> "LabeledGraph":
        """Merge the endpoints of edge i and drop it; other parallel edges become loops."""
        u, v, _ = self.edges[i]
        if u == v:
            raise ValueError("cannot contract a loop")
        keep, gone = min(u, v), max(u, v)

        def relabel(w):
            w = keep if w == gone else w
            return w - 1 if w > gone else w

        rest = self.edges[:i] + self.edges[i + 1:]
        return LabeledGraph(self.vertices - 1, tuple((relabel(a), relabel(b), m) for a, b, m in rest))


def _tree_edges(n: int, edges):
    """Yield the edges that join two different components (union-find)."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in edges:
        a, b = find(e[0]), find(e[1])
        if a != b:
            parent[a] = b
            yield e


def graph_statistics(G: LabeledGraph) -> dict[tuple[int, int], int]:
    """Map ``(r(A), |A|)`` to ``Σ ∏_{e∈A} m_e`` over edge subsets A."""
    stats: dict[tuple[int, int], int] = {}
    E = len(G.edges)
    for size in range(E + 1):
        for A in combinations(range(E), size):
            key = (G.rank(A), size)
            stats[key] = stats.get(key, 0) + prod(G.edges[i][2] for i in A)
    return stats


def _expansion(G: LabeledGraph) -> BivariatePolynomial:
    return polynomial_from_statistics(graph_statistics(G), G.rank())


def _deletion_contraction(G: LabeledGraph) -> BivariatePolynomial:
    full = G.rank()
    for i, (u, v, m) in enumerate(G.edges):
        if u == v:
            continue
        H = G.without(i)
        if H.rank() == full:  # not a bridge
            return _deletion_contraction(H) + m * _deletion_contraction(G.contract(i))
    # only loops and bridges remain
    return _expansion(G)


def graph_m_tutte(G: LabeledGraph, method: str = "expansion") -> BivariatePolynomial:
    """``Σ_A m(A) (x-1)^(r(G)-r(A)) (y-1)^(|A|-r(A))`` with ``m(A) = ∏ m_e``.

    ``method`` is ``"expansion"`` (sum over edge subsets) or
    ``"deletion_contraction"``, which uses ``M_G = M_{G-e} + m_e M_{G/e}`` on the
    first edge that is neither a loop nor a bridge.
    """
    if method == "expansion":
        return _expansion(G)
    if method == "deletion_contraction":
        return _deletion_contraction(G)
    raise ValueError(f"unknown method {method!r}")


def spanning_tree_count(G: LabeledGraph) -> int:
    """Spanning trees of ``G_m``, as ``M_G(1, 1)``."""
    if not G.is_connected():
        raise PreconditionError("spanning trees are counted for a connected graph")
    return graph_m_tutte(G).evaluate(1, 1)


def forest_count(G: LabeledGraph) -> int:
    """Forests of ``G_m``, as ``M_G(2, 1)``."""
    return graph_m_tutte(G).evaluate(2, 1)


def graph_to_vectors(G: LabeledGraph) -> CharacterList:
    """The list ``e_u - e_v`` in ``Z^|V|``, one vector per edge of a simple unlabeled graph."""
    seen = set()
    for u, v, m in G.edges:
        if m != 1:
            raise PreconditionError("the vector realization needs all edge labels equal to 1")
        if u == v:
            raise PreconditionError("the vector realization needs a graph without loops")
        if frozenset((u, v)) in seen:
            raise PreconditionError("the vector realization needs a graph without parallel edges")
        seen.add(frozenset((u, v)))
    vectors = []
    for u, v, _ in G.edges:
        vec = [0] * G.vertices
        vec[u] += 1
        vec[v] -= 1
        vectors.append(vec)
    return CharacterList.from_vectors(vectors, G.vertices)
