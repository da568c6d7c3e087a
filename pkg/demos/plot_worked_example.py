r"""
Ceiling table on a small graph
==============================

A vertex of degree four joined to three pendants and to a triangle. The
table lists, for every vertex ``y`` of ``G ∨ u``, the closed neighbourhood
``A``, the degrees induced inside it, ``c(y:u)`` and the revised ``c*(y:u)``.
"""

from cliqueceiling import accn, accn_trace, brute_force_omega, from_edges

g = from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (5, 6)])

trace = accn_trace(g)
print(trace.to_text())

# The bound is exact here: the triangle {5, 6, 7} is a maximum clique.
print("bound on ω(G):", accn(g).bound_primary, " exact ω(G):", brute_force_omega(g))
