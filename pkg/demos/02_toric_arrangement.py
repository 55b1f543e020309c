"""The toric arrangement of a list in Z^2: layers, Möbius values and cohomology.

Run with ``python3 demos/02_toric_arrangement.py``.
"""

from arithtutte import (
    CharacterList,
    characteristic_polynomial,
    compact_regions,
    enumerate_layers,
    euler_characteristic,
    m_tutte_expansion,
    poincare_polynomial,
)
from arithtutte.dm import dm_decomposition_check

X = CharacterList.from_vectors([(2, 0), (0, 2), (1, 1), (1, -1)])
M = m_tutte_expansion(X)
print("characters:", X.free_vectors, "on the torus (C*)^2")
print("M_X =", M)

# Layers are stored by their real angle coordinates θ in (R/Z)^2; a character
# χ vanishes on θ when <χ, θ> is an integer.
P = enumerate_layers(X)
print()
print(f"{len(P)} layers")
for i, L in enumerate(P.layers):
    base = ", ".join(str(c) for c in L.basepoint)
    chars = [X.free_vectors[j] for j in L.support]
    print(f"  dim {L.dim}  through ({base})  mu = {P.mobius[i]:>2}  cut out by {chars}")

chi = characteristic_polynomial(P)
print()
print("characteristic polynomial:", chi, " check M(1-q, 0) =", M.evaluate(1 - chi.gen(), 0))
print("Poincare polynomial:      ", poincare_polynomial(X, verify=True))
print("Euler characteristic:     ", euler_characteristic(X), "= M(1,0) =", M.evaluate(1, 0))
print("regions on (S^1)^2:       ", compact_regions(X))

# The Hilbert series M(1, y) splits over the points of the arrangement.
total, parts = dm_decomposition_check(X)
print()
print("Hilbert series of the Dahmen-Micchelli space:", total)
for p, s in parts:
    print(f"  point ({', '.join(str(c) for c in p.basepoint)}): {s}")
