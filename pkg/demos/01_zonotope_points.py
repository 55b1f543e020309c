"""Counting lattice points of a zonotope with the multiplicity Tutte polynomial.

Run with ``python3 demos/01_zonotope_points.py``.
"""

from arithtutte import CharacterList, lattice_points, m_tutte_expansion, ordinary_tutte, stratification, volume
from arithtutte.zonotope import shifted_points

X = CharacterList.from_vectors([(3, 3), (1, -1), (2, 0)])
M = m_tutte_expansion(X)
print("X =", X.free_vectors)
print("M_X(x, y) =", M)
print("T_X(x, y) =", ordinary_tutte(X), "(the ordinary Tutte polynomial forgets the lattice)")

# M(2,1) counts all lattice points of Z(X)
print()
print("lattice points in Z(X):", lattice_points(X), "=", "M(2,1) =", M.evaluate(2, 1))
print("volume of Z(X):        ", volume(X), "=", "M(1,1) =", M.evaluate(1, 1))

# A generic shift keeps exactly volume-many points.  Each is labelled by the
# dimension of the block of the paving it lands in; the label counts are
# the coefficients of M(x, 1).
S = stratification(X)
print()
print("shifted points by label:", list(S.counts))
print("M(x, 1) =", M.at_y(1))

labels = shifted_points(X)
xs = [p[0] for p in labels]
ys = [p[1] for p in labels]
print()
print("shifted zonotope, each point drawn as its label (. = outside):")
for row in range(max(ys), min(ys) - 1, -1):
    print("  " + " ".join(str(labels[(c, row)]) if (c, row) in labels else "." for c in range(min(xs), max(xs) + 1)))

# Changing the order used to build the shift moves points around but keeps the counts.
for order in ([1, 2, 0], [2, 0, 1]):
    print(f"order {order}: counts {list(stratification(X, order).counts)}")
