"""n tokens on the 3-star and on the one-ray sun graph.

The star's braid group is free on C(n, 2) generators, indexed by arm
occupancies (a1, a2, a3); adding a circle at the centre raises the rank to n.
"""
import time

from braidscope import (certify_free, enumerate_complex, fundamental_presentation, make_star,
                        make_sun, star_generator_index_set, subdivide_for)
from braidscope.sun_models import fine_sun1_graph, star_base_configuration

# %% Generator labels for the 3-star.
for n in range(2, 6):
    print(n, star_generator_index_set(n))

# %% Direct computation, based at the configuration with every token on the
# first arm next to its leaf.
for n in range(2, 6):
    t = time.perf_counter()
    g = subdivide_for(make_star(3), n)
    cx = enumerate_complex(g, n, base=star_base_configuration(g, n))
    rank = certify_free(fundamental_presentation(cx))
    print(f"star, n={n}: rank {rank} (expected {len(star_generator_index_set(n))}) "
          f"[{time.perf_counter() - t:.2f}s, {cx.counts()} cells]")

# %% One-ray sun: minimal subdivision and the finer 4n-2 / 2n-2 model agree.
for n in range(2, 5):
    minimal = subdivide_for(make_sun(1), n)
    fine = fine_sun1_graph(n)
    ranks = [certify_free(fundamental_presentation(enumerate_complex(h, n))) for h in (minimal, fine)]
    print(f"one-ray sun, n={n}: {ranks} on {minimal.vertex_count} / {fine.vertex_count} vertices")
