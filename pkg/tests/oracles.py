"""Brute-force references the library is checked against.

Nothing here imports the code under test beyond the Graph container.
"""
from itertools import combinations, product


def naive_cell_counts(g, n):
    atoms = [frozenset([v]) for v in range(g.vertex_count)] + [frozenset(e) for e in g.edges]
    counts = [0] * (n + 1)
    for cell in combinations(atoms, n):
        if all(not (a & b) for a, b in combinations(cell, 2)):
            counts[sum(len(a) == 2 for a in cell)] += 1
    return counts


def _adj(g):
    adj = {v: set() for v in range(g.vertex_count)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def simple_paths(g, s, t):
    """Edge lengths of every simple path from s to t."""
    adj = _adj(g)
    out = []

    def dfs(u, seen, length):
        if u == t:
            out.append(length)
            return
        for w in adj[u]:
            if w not in seen:
                dfs(w, seen | {w}, length + 1)

    dfs(s, {s}, 0)
    return out


def cycle_lengths(g):
    """Lengths of every simple cycle (each found from its smallest vertex)."""
    adj = _adj(g)
    out = []

    def dfs(start, u, seen, length):
        for w in adj[u]:
            if w == start and length >= 2:
                out.append(length + 1)
            elif w > start and w not in seen:
                dfs(start, w, seen | {w}, length + 1)

    for s in adj:
        dfs(s, s, {s}, 0)
    return out


def meets_conditions(g, n):
    """The four subdivision conditions, checked by exhaustive path search."""
    adj = _adj(g)
    ess = [v for v in adj if len(adj[v]) >= 3]
    leaves = [v for v in adj if len(adj[v]) == 1]
    for a, b in combinations(ess, 2):
        if min(simple_paths(g, a, b), default=n + 1) < n + 1:
            return False
    if min(cycle_lengths(g), default=n + 1) < n + 1:
        return False
    for a in ess:
        for b in leaves:
            if min(simple_paths(g, a, b), default=n) < n:
                return False
    if not ess and not cycle_lengths(g) and g.vertex_count < n + 1:
        return False
    return True


def compositions(total, lows):
    """Triples with given lower bounds summing to total, by brute force."""
    rng = range(total + 1)
    return sorted(t for t in product(rng, rng, rng)
                  if sum(t) == total and all(x >= lo for x, lo in zip(t, lows)))


def h1_rank_by_rational_rank(cx):
    """Betti number from ranks over Q via sympy (independent of our SNF)."""
    import sympy

    def rank(rows, ncols):
        if not rows:
            return 0
        m = sympy.zeros(len(rows), ncols)
        for i, r in enumerate(rows):
            for c, v in r.items():
                m[i, c] = v
        return m.rank()

    d1 = [{h: 1, t: -1} for _, t, h in cx.one_cells]
    d2 = [{a: -1, b: 1, c: 1, d: -1} for _, (a, b, c, d) in cx.two_cells]
    return len(cx.one_cells) - rank(d1, len(cx.zero_cells)) - rank(d2, len(cx.one_cells))
