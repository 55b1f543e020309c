"""Independent reference computations.

None of these share code with the library's algorithms: minors are
expanded directly, Smith forms come from sympy, graphs are expanded into
explicit multigraphs and counted edge set by edge set.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd, prod

import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf


def det(M):
    """Laplace expansion; fine for the tiny matrices used here."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum(
        (-1) ** j * M[0][j] * det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n) if M[0][j]
    )


def minor_gcd(M, k):
    rows, cols = len(M), len(M[0]) if M else 0
    g = 0
    for R in combinations(range(rows), k):
        for C in combinations(range(cols), k):
            g = gcd(g, det([[M[r][c] for c in C] for r in R]))
    return g


def determinantal_invariants(M):
    """Smith invariants from the ratios of successive minor GCDs."""
    out, prev = [], 1
    for k in range(1, min(len(M), len(M[0]) if M else 0) + 1):
        g = minor_gcd(M, k)
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def sympy_invariants(M):
    if not M or not M[0]:
        return []
    D = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
    diag = [abs(int(D[i, i])) for i in range(min(D.shape))]
    return sorted(d for d in diag if d)


def rational_rank(vectors):
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()


def lattice_index(vectors, n):
    """``[Λ_A : <A>]`` as the GCD of the maximal nonzero minors."""
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return 1
    r = rational_rank(vectors)
    return minor_gcd(vectors, r)


def m_tutte_lattice(vectors, n):
    """Subset expansion for lattice lists, with m(A) from minors."""
    x, y = sympy.symbols("x y")
    vectors = [list(v) for v in vectors]
    rX = rational_rank(vectors)
    total = 0
    for k in range(len(vectors) + 1):
        for A in combinations(vectors, k):
            r = rational_rank(list(A))
            total += lattice_index(A, n) * (x - 1) ** (rX - r) * (y - 1) ** (k - r)
    return sympy.Poly(sympy.expand(total), x, y)


def poly_to_dict(P):
    return {tuple(m): int(c) for m, c in zip(P.monoms(), P.coeffs())}


def torsion_group_order(vectors, n, torsion):
    """``|torsion(Γ/<A>)|`` by brute force over a finite box, for tiny groups.

    ``Γ/<A>`` is presented by the columns of A and the torsion relations;
    its torsion order is the product of the nonzero sympy Smith invariants.
    """
    N = n + len(torsion)
    rows = [list(v) for v in vectors]
    for i, q in enumerate(torsion):
        row = [0] * N
        row[n + i] = q
        rows.append(row)
    if not rows:
        return 1
    return prod(sympy_invariants(rows))


# --- graphs ---------------------------------------------------------------


def expand_multigraph(G):
    """Edge list of ``G_m``: every edge repeated ``m_e`` times."""
    return [(u, v) for u, v, m in G.edges for _ in range(m)]


def _acyclic(n, edges):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def brute_forests(G):
    E = expand_multigraph(G)
    return sum(
        1 for k in range(min(len(E), G.vertices - 1) + 1) for S in combinations(E, k) if _acyclic(G.vertices, S)
    )


def brute_spanning_trees(G):
    E = expand_multigraph(G)
    k = G.vertices - 1
    return sum(1 for S in combinations(E, k) if _acyclic(G.vertices, S))


def kirchhoff(G):
    """Matrix-tree theorem on the Laplacian of G_m."""
    n = G.vertices
    if n == 1:
        return 1
    L = [[0] * n for _ in range(n)]
    for u, v in expand_multigraph(G):
        if u != v:
            L[u][u] += 1
            L[v][v] += 1
            L[u][v] -= 1
            L[v][u] -= 1
    return int(sympy.Matrix([row[1:] for row in L[1:]]).det())


def graph_m_tutte_reference(G):
    n = G.vertices
    x, y = sympy.symbols("x y")

    def rank(A):
        comps = n
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for u, v, _ in A:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                comps -= 1
        return n - comps

    rG = rank(G.edges)
    total = 0
    for k in range(len(G.edges) + 1):
        for A in combinations(G.edges, k):
            r = rank(A)
            total += prod(m for _, _, m in A) * (x - 1) ** (rG - r) * (y - 1) ** (k - r)
    return poly_to_dict(sympy.Poly(sympy.expand(total) + x * 0 + y * 0, x, y))


# --- toric -----------------------------------------------------------------


def torus_points_brute(vectors, n, denominator):
    """Points θ ∈ ((1/N) Z / Z)^n where every vector takes an integer value."""
    pts = []
    for num in product(range(denominator), repeat=n):
        theta = [Fraction(a, denominator) for a in num]
        if all(sum(c * t for c, t in zip(v, theta)).denominator == 1 for v in vectors):
            pts.append(tuple(theta))
    return pts


def zonotope_points_brute(vectors, n):
    """Lattice points of Z(X) via sympy facet normals (independent of the library)."""
    distinct = sorted({tuple(v) for v in vectors if any(v)})
    normals = set()
    for A in combinations(distinct, n - 1):
        M = sympy.Matrix([list(a) for a in A]) if A else sympy.zeros(0, n)
        if A and M.rank() != n - 1:
            continue
        ns = M.nullspace() if A else [sympy.Matrix([1])]
        v = ns[0]
        den = sympy.ilcm(1, 1, *[sympy.fraction(c)[1] for c in v])
        w = [int(c * den) for c in v]
        g = 0
        for a in w:
            g = gcd(g, a)
        normals.add(tuple(a // g for a in w))
    box = [range(sum(min(0, v[i]) for v in vectors), sum(max(0, v[i]) for v in vectors) + 1) for i in range(n)]
    bounds = []
    for xi in normals:
        dots = [sum(a * b for a, b in zip(xi, v)) for v in vectors]
        bounds.append((xi, sum(d for d in dots if d < 0), sum(d for d in dots if d > 0)))
    count = 0
    for p in product(*box):
        if all(lo <= sum(a * b for a, b in zip(xi, p)) <= hi for xi, lo, hi in bounds):
            count += 1
    return count
