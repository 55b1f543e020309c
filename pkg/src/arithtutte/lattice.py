"""Exact integer linear algebra and finitely generated abelian groups.

Matrices are plain lists of lists of Python ints (row-major), so entries
are arbitrary precision and nothing ever touches floating point.  Lists
of lattice vectors are passed as *rows*: ``smith_normal_form([(3, 3), (1, -1)])``
is the matrix whose rows are the two vectors.  Ranks, Smith invariants
and lattice indices do not depend on that choice; Hermite forms and
kernels do, and are documented accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Callable, Iterable, Sequence

from .exceptions import DimensionMismatchError

IntMatrix = list  # list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Transpose; ``ncols`` fixes the shape of an empty matrix."""
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V`` is diagonal with ``invariants`` d_1 | d_2 | ... on it.

    ``V_inv`` is carried along because the saturation and the quotient maps
    need it and inverting a unimodular matrix afterwards is wasteful.
    """

    U: IntMatrix
    V: IntMatrix
    invariants: tuple[int, ...]
    V_inv: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.invariants)


def _min_pivot(D, t, m, n):
    best = None
    for i in range(t, m):
        row = D[i]
        for j in range(t, n):
            a = row[j]
            if a and (best is None or abs(a) < best[0]):
                best = (abs(a), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivot is the entry of least absolute value in the untreated block,
    ties broken by (row, column), so decompositions are reproducible.
    ``ncols`` is only needed for a matrix with no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(map(int, row)) for row in A]
    for row in D:
        if len(row) != n:
            raise DimensionMismatchError("ragged matrix")
    U = identity(m)
    V = identity(n)
    Vi = identity(n)
    invariants = []
    t = 0
    while t < min(m, n):
        piv = _min_pivot(D, t, m, n)
        if piv is None:
            break
        while True:
            _, i, j = piv
            if i != t:
                D[t], D[i] = D[i], D[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                for row in D:
                    row[t], row[j] = row[j], row[t]
                for row in V:
                    row[t], row[j] = row[j], row[t]
                Vi[t], Vi[j] = Vi[j], Vi[t]
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // p
                    if q:
                        Di, Dt = D[i], D[t]
                        for k in range(t, n):
                            Di[k] -= q * Dt[k]
                        Ui, Ut = U[i], U[t]
                        for k in range(m):
                            Ui[k] -= q * Ut[k]
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // p
                    if q:
                        for row in D:
                            row[j] -= q * row[t]
                        for row in V:
                            row[j] -= q * row[t]
                        Vt, Vj = Vi[t], Vi[j]
                        for k in range(n):
                            Vt[k] += q * Vj[k]
                    if D[t][j]:
                        clean = False
            if clean:
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if D[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                Dt, Db = D[t], D[bad]
                for k in range(t, n):
                    Dt[k] += Db[k]
                Ut, Ub = U[t], U[bad]
                for k in range(m):
                    Ut[k] += Ub[k]
                piv = (abs(p), t, t)
                continue
            piv = _min_pivot(D, t, m, n)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        invariants.append(D[t][t])
        t += 1
    return SmithDecomposition(U, V, tuple(invariants), Vi)


def hermite_normal_form(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form: returns ``(H, U)`` with ``U @ A == H``.

    H is in row-echelon form with positive pivots, entries above each pivot
    reduced into ``[0, pivot)``, and zero rows last.  The nonzero rows of H
    depend only on the lattice spanned by the rows of A.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            rows = [i for i in range(r, m) if H[i][c]]
            if not rows:
                break
            i = min(rows, key=lambda k: (abs(H[k][c]), k))
            if i != r:
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            p = H[r][c]
            for i in range(r):
                q = H[i][c] // p
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    return H, U


def hermite_basis(vectors: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Canonical basis (nonzero Hermite rows) of the lattice spanned by ``vectors``."""
    H, _ = hermite_normal_form([list(v) for v in vectors])
    return tuple(tuple(row) for row in H if any(row))


def rank(A: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix: the number of nonzero Smith invariants."""
    if not A:
        return 0
    return smith_normal_form(A).rank


def rank_and_index(vectors: Sequence[Sequence[int]], dim: int) -> tuple[int, int]:
    """Rank and saturation index of the lattice spanned by ``vectors`` in Z^dim."""
    if not vectors:
        return 0, 1
    snf = smith_normal_form(vectors, dim)
    return snf.rank, prod(snf.invariants)


def saturation(vectors: Sequence[Sequence[int]], dim: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Hermite basis of ``Z^n ∩ span_R(vectors)``, the saturation of their span."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return ()
    snf = smith_normal_form(vectors, dim)
    return hermite_basis(snf.V_inv[: snf.rank])


def integer_kernel(vectors: Sequence[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    """Hermite basis of ``{θ ∈ Z^dim : <v, θ> = 0 for all v}``; it is saturated."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return tuple(tuple(row) for row in identity(dim))
    snf = smith_normal_form(vectors, dim)
    cols = transpose(snf.V)[snf.rank:]
    return hermite_basis(cols)


# --------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True)
class GroupElement:
    free: tuple[int, ...]
    tors: tuple[int, ...] = ()

    @property
    def coords(self) -> tuple[int, ...]:
        return self.free + self.tors

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.tors)

    def __neg__(self):
        return GroupElement(tuple(-a for a in self.free), tuple(-a for a in self.tors))


@dataclass(frozen=True)
class FgGroup:
    """``Z^free_rank × Z/q_1 × ... × Z/q_s`` in invariant-factor form."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(q) for q in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for q in self.torsion:
            if q < 2:
                raise ValueError(f"torsion factor {q} must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion factors {self.torsion} are not a divisor chain")

    @classmethod
    def lattice(cls, n: int) -> "FgGroup":
        return cls(n, ())

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    @property
    def ncoords(self) -> int:
        return self.free_rank + len(self.torsion)

    def is_lattice(self) -> bool:
        return not self.torsion

    def element(self, coords: Sequence[int]) -> GroupElement:
        """Element from ``free_rank + len(torsion)`` coordinates, residues reduced."""
        coords = [int(c) for c in coords]
        if len(coords) != self.ncoords:
            raise DimensionMismatchError(
                f"expected {self.ncoords} coordinates, got {len(coords)}"
            )
        n = self.free_rank
        return GroupElement(
            tuple(coords[:n]), tuple(c % q for c, q in zip(coords[n:], self.torsion))
        )

    def check(self, g: GroupElement) -> None:
        if len(g.free) != self.free_rank or len(g.tors) != len(self.torsion):
            raise DimensionMismatchError(f"{g} does not belong to {self}")

    def elements_of_torsion(self):
        """All residue vectors of the torsion subgroup, in lexicographic order."""
        from itertools import product

        return product(*(range(q) for q in self.torsion))


def _relation_matrix(G: FgGroup, gens: Sequence[GroupElement]) -> IntMatrix:
    """Rows generate the kernel of ``Z^(n+s) -> Γ/<gens>``."""
    N = G.ncoords
    rows = [list(g.coords) for g in gens]
    for i, q in enumerate(G.torsion):
        row = [0] * N
        row[G.free_rank + i] = q
        rows.append(row)
    return rows


def multiplicity(G: FgGroup, A: Sequence[GroupElement]) -> int:
    """Index of ``<A>`` in ``Γ_A = Λ_A × Γ_t``.

    This is the order of the torsion subgroup of ``Γ/<A>``, read off as the
    product of the Smith invariants of its relation matrix.
    """
    for g in A:
        G.check(g)
    rows = _relation_matrix(G, A)
    if not rows:
        return 1
    return prod(smith_normal_form(rows, G.ncoords).invariants)


def free_rank_of(A: Sequence[GroupElement]) -> int:
    """Rank of the projections of ``A`` to the free part."""
    rows = [list(g.free) for g in A if any(g.free)]
    return rank(rows)


def _quotient_from_relations(G: FgGroup, rows: IntMatrix):
    N = G.ncoords
    if not rows:
        rows_ = [[0] * N]
    else:
        rows_ = rows
    # columns of the presentation are the relations
    snf = smith_normal_form(transpose(rows_, 0), len(rows_))
    invs = snf.invariants
    keep_tors = [i for i, d in enumerate(invs) if d > 1]
    torsion = tuple(invs[i] for i in keep_tors)
    free_idx = list(range(len(invs), N))
    U = snf.U

    def project(g: GroupElement) -> GroupElement:
        G.check(g)
        y = matvec(U, g.coords)
        return GroupElement(
            tuple(y[i] for i in free_idx),
            tuple(y[i] % invs[i] for i in keep_tors),
        )

    return FgGroup(len(free_idx), torsion), project


def quotient_by(G: FgGroup, lam: GroupElement) -> tuple[FgGroup, Callable[[GroupElement], GroupElement]]:
    """Invariant-factor form of ``Γ/<λ>`` and the projection onto it."""
    G.check(lam)
    return _quotient_from_relations(G, _relation_matrix(G, [lam]))


def normalize_torsion(torsion: Sequence[int]) -> tuple[FgGroup, Callable[[Sequence[int]], tuple[int, ...]]]:
    """Invariant-factor form of ``⊕ Z/q_i`` for arbitrary positive q_i.

    Returns the finite group and a map sending residue vectors of the input
    presentation to residues of the normal form.
    """
    torsion = [int(q) for q in torsion]
    if any(q < 1 for q in torsion):
        raise ValueError("torsion orders must be positive")
    s = len(torsion)
    if s == 0:
        return FgGroup(0, ()), lambda r: ()
    diag = [[torsion[i] if i == j else 0 for j in range(s)] for i in range(s)]
    snf = smith_normal_form(diag)
    keep = [i for i, d in enumerate(snf.invariants) if d > 1]
    invs = snf.invariants

    def project(r):
        y = matvec(snf.U, list(r))
        return tuple(y[i] % invs[i] for i in keep)

    return FgGroup(0, tuple(invs[i] for i in keep)), project
