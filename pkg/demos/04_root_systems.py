"""Weyl group orders from the positive roots of classical root systems.

Run with ``python3 demos/04_root_systems.py``.
"""

from arithtutte import m_tutte_expansion, poincare_polynomial, root_system

print(f"{'type':<5}{'roots':>6}{'M(1,0)':>9}{'|W|':>7}")
for family, n in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4)]:
    spec = root_system(family, n)
    M = m_tutte_expansion(spec.realization)
    print(f"{family + str(n):<5}{len(spec.realization):>6}{M.evaluate(1, 0):>9}{spec.weyl_order:>7}")

# Realized in the lattice dual to the coroots, the roots of C2 are the list
# (2,-1), (-2,2), (0,1), (2,0).  A unimodular change of basis carries it
# onto (2,0), (0,2), (1,1), (1,-1).
C2 = root_system("C", 2)
print()
print("C2 Cartan matrix:", C2.cartan)
print("C2 roots:", C2.realization.free_vectors)
print("M =", m_tutte_expansion(C2.realization))
print("Poincare polynomial of the complement:", poincare_polynomial(C2.realization))
