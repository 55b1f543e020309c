"""Lists with torsion and graphs with labelled edges.

Run with ``python3 demos/03_groups_and_graphs.py``.
"""

from arithtutte import CharacterList, LabeledGraph, graph_m_tutte, m_tutte_expansion, m_tutte_recursive
from arithtutte.graphs import forest_count, spanning_tree_count

# Elements of Z x Z/4: the last coordinate is a residue mod 4.
X = CharacterList.from_vectors([(1, 1), (2, 0), (0, 2)], free_rank=1, torsion=(4,))
print("X in Z x Z/4:", [g.coords for g in X])
print("  by subsets:           ", m_tutte_expansion(X))
print("  by deletion/quotient: ", m_tutte_recursive(X))

# Edge labels multiply.  M(1,1) and M(2,1) still count trees and forests of
# the multigraph where edge e is repeated m_e times.
G = LabeledGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 2)))
print()
print("triangle with labels 1, 1, 2:", graph_m_tutte(G))
print("  spanning trees:", spanning_tree_count(G), " forests:", forest_count(G))

# Unlike lists in a group, labelled graphs can give negative coefficients.
H = LabeledGraph(3, ((0, 1, 3), (1, 2, 3), (0, 2, 3)))
M = graph_m_tutte(H)
print()
print("triangle with labels 3, 3, 3:", M)
print("  deletion-contraction agrees:", M == graph_m_tutte(H, "deletion_contraction"))
print("  spanning trees:", spanning_tree_count(H), " forests:", forest_count(H))
