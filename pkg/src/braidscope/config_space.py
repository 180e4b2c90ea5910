"""The discretized configuration complex of ``n`` unlabeled tokens on a graph.

A cell is a set of ``n`` atoms (vertices or closed edges of the graph) whose
closures are pairwise disjoint; its dimension is the number of edge atoms.
Atoms are tuples, ``(v,)`` for a vertex and ``(u, w)`` with ``u < w`` for an
edge, and a cell is the sorted tuple of its atoms.  Plain tuple comparison
gives the canonical order used for all cell indices.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInput, InvalidParameter
from .graph import Graph
from .smith import invariant_factors

Atom = tuple[int, ...]


@dataclass(frozen=True, order=True)
class ConfigCell:
    atoms: tuple[Atom, ...]

    @classmethod
    def of(cls, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()) -> "ConfigCell":
        atoms = [(v,) for v in vertices] + [(min(e), max(e)) for e in edges]
        cell = cls(tuple(sorted(atoms)))
        seen: set[int] = set()
        for a in cell.atoms:
            if seen.intersection(a):
                raise InvalidInput(f"atoms of {cell.atoms} are not closure-disjoint")
            seen.update(a)
        return cell

    @property
    def dimension(self) -> int:
        return sum(1 for a in self.atoms if len(a) == 2)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(a[0] for a in self.atoms if len(a) == 1)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(a for a in self.atoms if len(a) == 2)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for a in self.atoms for v in a)

    def label(self) -> str:
        return ".".join("-".join(map(str, a)) for a in self.atoms)

    def __len__(self):
        return len(self.atoms)


def _cell(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> tuple[Atom, ...]:
    return tuple(sorted([(v,) for v in vertices] + list(edges)))


@dataclass(frozen=True)
class ConfigComplex:
    """Cells of dimensions 0, 1, 2 with incidence.

    ``one_cells[i]`` is ``(cell, tail, head)`` where tail/head are 0-cell
    indices obtained by moving the edge token to its smaller/larger endpoint.
    ``two_cells[i]`` is ``(cell, boundary)`` with ``boundary`` the four 1-cell
    indices ``(x_a, x_b, y_c, y_d)``: the first edge atom ``(a, b)`` resolved to
    ``a`` / ``b``, then the second edge atom ``(c, d)`` resolved to ``c`` / ``d``.
    """

    graph: Graph
    n_tokens: int
    zero_cells: tuple[ConfigCell, ...]
    one_cells: tuple[tuple[ConfigCell, int, int], ...]
    two_cells: tuple[tuple[ConfigCell, tuple[int, int, int, int]], ...]
    base: int = 0

    def counts(self) -> list[int]:
        return [len(self.zero_cells), len(self.one_cells), len(self.two_cells)]

    def zero_index(self, vertices: Iterable[int]) -> int:
        key = ConfigCell(_cell(sorted(vertices), ()))
        for i, c in enumerate(self.zero_cells):
            if c == key:
                return i
        raise InvalidInput(f"no 0-cell with vertices {sorted(key.vertices)}")

    def with_base(self, vertices: Iterable[int]) -> "ConfigComplex":
        vertices = list(vertices)
        if len(vertices) != self.n_tokens:
            raise InvalidInput(f"base needs {self.n_tokens} vertices, got {len(vertices)}")
        return ConfigComplex(self.graph, self.n_tokens, self.zero_cells,
                             self.one_cells, self.two_cells, self.zero_index(vertices))

    def to_dot(self) -> str:
        lines = ["graph UD {"]
        for i, c in enumerate(self.zero_cells):
            lines.append(f'  c{i} [label="{{{",".join(map(str, c.vertices))}}}"];')
        for cell, t, h in self.one_cells:
            lines.append(f'  c{t} -- c{h} [label="{cell.label()}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check(g: Graph, n: int):
    if n < 1:
        raise InvalidParameter("number of tokens must be positive")
    if n > g.vertex_count:
        raise InvalidParameter(f"{n} tokens do not fit on {g.vertex_count} vertices")


def enumerate_complex(g: Graph, n: int, base: Sequence[int] | None = None) -> ConfigComplex:
    _check(g, n)
    verts = range(g.vertex_count)

    zero = [c for c in combinations(verts, n)]  # already canonical order
    zero_index = {c: i for i, c in enumerate(zero)}

    one = []
    for e in g.edges:
        rest = [v for v in verts if v not in e]
        for s in combinations(rest, n - 1):
            one.append((_cell(s, [e]), s, e))
    one.sort()
    one_index = {c: i for i, (c, _, _) in enumerate(one)}
    one_cells = []
    for c, s, (u, w) in one:
        tail = zero_index[tuple(sorted(s + (u,)))]
        head = zero_index[tuple(sorted(s + (w,)))]
        one_cells.append((ConfigCell(c), tail, head))

    two = []
    if n >= 2:
        for e1, e2 in combinations(g.edges, 2):
            if set(e1) & set(e2):
                continue
            rest = [v for v in verts if v not in e1 and v not in e2]
            for s in combinations(rest, n - 2):
                two.append((_cell(s, [e1, e2]), s, e1, e2))
    two.sort()
    two_cells = []
    for c, s, e1, e2 in two:
        bd = tuple(one_index[_cell(s + (x,), [other])]
                   for x, other in ((e1[0], e2), (e1[1], e2), (e2[0], e1), (e2[1], e1)))
        two_cells.append((ConfigCell(c), bd))

    cx = ConfigComplex(g, n, tuple(ConfigCell(_cell(c, ())) for c in zero),
                       tuple(one_cells), tuple(two_cells))
    return cx.with_base(base) if base is not None else cx


def count_cells_all_dims(g: Graph, n: int) -> list[int]:
    """Number of configuration cells in every dimension ``0..n``."""
    _check(g, n)
    # atoms in canonical order, each with a bitmask of its closure
    atoms = sorted([(v,) for v in range(g.vertex_count)] + list(g.edges))
    masks = [sum(1 << v for v in a) for a in atoms]
    is_edge = [len(a) == 2 for a in atoms]
    counts = [0] * (n + 1)

    def rec(start, left, used, dim):
        if left == 0:
            counts[dim] += 1
            return
        for i in range(start, len(atoms) - left + 1):
            if masks[i] & used:
                continue
            rec(i + 1, left - 1, used | masks[i], dim + is_edge[i])

    rec(0, n, 0, 0)
    return counts


def euler_characteristic(g: Graph, n: int) -> int:
    return sum((-1) ** d * c for d, c in enumerate(count_cells_all_dims(g, n)))


def connected_components(cx: ConfigComplex) -> tuple[int, list[int]]:
    """Components of the 1-skeleton, numbered in order of their smallest 0-cell."""
    adj: list[list[int]] = [[] for _ in cx.zero_cells]
    for _, t, h in cx.one_cells:
        adj[t].append(h)
        adj[h].append(t)
    comp = [-1] * len(cx.zero_cells)
    k = 0
    for s in range(len(comp)):
        if comp[s] >= 0:
            continue
        comp[s] = k
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if comp[w] < 0:
                    comp[w] = k
                    queue.append(w)
        k += 1
    return k, comp


def counts_json(g: Graph, n: int) -> str:
    counts = count_cells_all_dims(g, n)
    chi = sum((-1) ** d * c for d, c in enumerate(counts))
    return json.dumps({"tokens": n, "counts": counts, "euler_characteristic": chi})


def boundary_rows(cx: ConfigComplex, dim: int) -> list[dict[int, int]]:
    """Cellular boundary matrix, one row per ``dim``-cell.

    A 1-cell maps to head - tail.  A square with boundary ``(x_a, x_b, y_c, y_d)``
    maps to ``y_c + x_b - y_d - x_a``, its boundary read once around.
    """
    if dim == 1:
        rows = []
        for _, t, h in cx.one_cells:
            rows.append({h: 1, t: -1})
        return rows
    if dim == 2:
        return [{xa: -1, xb: 1, yc: 1, yd: -1} for _, (xa, xb, yc, yd) in cx.two_cells]
    raise InvalidParameter("only dimensions 1 and 2 carry incidence")


def homology_h1(cx: ConfigComplex) -> tuple[int, list[int]]:
    """Integral first homology of the 2-skeleton as (betti, torsion)."""
    d1 = invariant_factors(boundary_rows(cx, 1))
    d2 = invariant_factors(boundary_rows(cx, 2))
    return len(cx.one_cells) - len(d1) - len(d2), [d for d in d2 if d > 1]
