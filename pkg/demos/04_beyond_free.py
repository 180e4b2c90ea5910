"""What happens when the braid group is not free.

Two tokens on the complete graph K5 give the fundamental group of a closed
non-orientable surface.  Greedy simplification stops with one long relator
and reports no certified rank; the abelianization shows the 2-torsion.
"""
from itertools import combinations

from braidscope import (Graph, abelian_invariants, enumerate_complex, euler_characteristic,
                        fundamental_presentation, subdivide_for, tietze_simplify)

k5 = Graph(5, tuple(combinations(range(5), 2)))
g = subdivide_for(k5, 2)
p = fundamental_presentation(enumerate_complex(g, 2))
r = tietze_simplify(p)

# %%
print("certified free rank:", r.free_rank)
print("after simplification:", r.presentation.rank, "generators,",
      len(r.presentation.relators), "relator of length", len(r.presentation.relators[0]))
print("abelianization (betti, torsion):", abelian_invariants(p))
print("euler characteristic:", euler_characteristic(g, 2))
