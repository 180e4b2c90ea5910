"""Two tokens on sun graphs, step by step.

Run with ``python demos/01_sun_graphs.py``.
"""
from braidscope import (abelian_invariants, certify_free, enumerate_complex, euler_characteristic,
                        fundamental_presentation, make_sun, subdivide_for)

# %% The sun graph with three rays, in its smallest simple-graph form:
# a triangle whose corners each carry one pendant edge.
g = make_sun(3)
print(g.vertex_count, "vertices,", g.edge_count, "edges")
print("labels:", dict(g.labels))

# %% Before building configurations the graph is subdivided so two tokens can
# pass each other: junction-to-junction segments get 3 edges, rays get 2.
s = subdivide_for(g, 2)
print("subdivided:", s.vertex_count, "vertices,", s.edge_count, "edges")

# %% The discretized configuration complex: 0-cells are pairs of vertices,
# 1-cells move one token along an edge, 2-cells move both at once.
cx = enumerate_complex(s, 2)
print("cells per dimension:", cx.counts())

# %% A spanning tree of the 1-skeleton turns every other edge into a generator
# and every square into a relator.
p = fundamental_presentation(cx)
print(p.rank, "generators,", len(p.relators), "relators")

# %% Greedy Tietze moves remove every relator, so the group is free.
print("certified free rank:", certify_free(p))
print("abelianization:", abelian_invariants(p))
print("1 - chi:", 1 - euler_characteristic(s, 2))

# %% The same for k = 1..8 rays; the rank is always k + 1.
for k in range(1, 9):
    sk = subdivide_for(make_sun(k), 2)
    print(k, certify_free(fundamental_presentation(enumerate_complex(sk, 2))))
