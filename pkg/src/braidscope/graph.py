"""Finite simple graphs, the graph families used throughout, and subdivision.

Vertices are ``0..vertex_count-1``.  Edges are stored as sorted pairs in
lexicographic order so two equal graphs always serialize identically.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InvalidInput, InvalidParameter

JUNCTION = "junction"
LEAF = "leaf"
SUBDIVISION = "subdivision"
ROLES = (JUNCTION, LEAF, SUBDIVISION)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[tuple[int, str], ...] = field(default=())

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidInput("vertex_count must be non-negative")
        edges = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInput(f"edge ({u}, {v}) out of range")
            edges.append((min(u, v), max(u, v)))
        edges.sort()
        if len(set(edges)) != len(edges):
            raise InvalidInput("duplicate edge")
        labels = self.labels
        if isinstance(labels, Mapping):
            labels = labels.items()
        labels = sorted((int(v), str(role)) for v, role in labels)
        for v, role in labels:
            if not 0 <= v < self.vertex_count:
                raise InvalidInput(f"label on missing vertex {v}")
            if role not in ROLES:
                raise InvalidInput(f"unknown vertex role {role!r}")
        if len({v for v, _ in labels}) != len(labels):
            raise InvalidInput("vertex labelled twice")
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label_map(self) -> dict[int, str]:
        return dict(self.labels)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    def relabeled(self, perm: list[int]) -> "Graph":
        """Return the isomorphic graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise InvalidInput("perm is not a permutation of the vertices")
        return Graph(
            self.vertex_count,
            tuple((perm[u], perm[v]) for u, v in self.edges),
            tuple((perm[v], role) for v, role in self.labels),
        )

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edges": [list(e) for e in self.edges],
            "labels": {str(v): role for v, role in self.labels},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        try:
            labels = {int(k): v for k, v in data.get("labels", {}).items()}
            return cls(int(data["vertex_count"]), tuple(tuple(e) for e in data["edges"]), labels)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"malformed graph JSON: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


def make_sun(n_rays: int) -> Graph:
    """Smallest simple-graph model of the sun graph with ``n_rays`` pendant rays.

    The cycle has 3 vertices for one ray, 4 (junctions opposite) for two rays
    and ``n_rays`` vertices otherwise.  Cycle vertices come first, then leaves.
    """
    if n_rays < 1:
        raise InvalidParameter("make_sun needs at least one ray")
    if n_rays == 1:
        c, junctions = 3, [0]
    elif n_rays == 2:
        c, junctions = 4, [0, 2]
    else:
        c, junctions = n_rays, list(range(n_rays))
    edges = [(i, (i + 1) % c) for i in range(c)]
    labels = {j: JUNCTION for j in junctions}
    for r, j in enumerate(junctions):
        edges.append((j, c + r))
        labels[c + r] = LEAF
    return Graph(c + n_rays, tuple(edges), labels)


def make_star(k_arms: int) -> Graph:
    if k_arms < 1:
        raise InvalidParameter("make_star needs at least one arm")
    labels = {0: JUNCTION}
    labels.update({i: LEAF for i in range(1, k_arms + 1)})
    return Graph(k_arms + 1, tuple((0, i) for i in range(1, k_arms + 1)), labels)


def make_cycle(m: int) -> Graph:
    if m < 3:
        raise InvalidParameter("a simple cycle needs at least 3 vertices")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def make_path(m: int) -> Graph:
    if m < 1:
        raise InvalidParameter("a path needs at least 1 vertex")
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


def essential_vertices(g: Graph) -> list[int]:
    return [v for v, d in enumerate(g.degrees()) if d >= 3]


def cycle_rank(g: Graph) -> int:
    if not g.is_connected():
        raise InvalidInput("cycle_rank needs a connected graph")
    return g.edge_count - g.vertex_count + 1


def segments(g: Graph) -> list[list[int]]:
    """Maximal paths whose interior vertices all have degree 2.

    Each segment is a vertex list from one endpoint to the other; a closed
    segment (loop at a vertex, or a component that is a bare cycle) repeats its
    first vertex at the end.  Order is deterministic.
    """
    adj = g.adjacency()
    deg = [len(a) for a in adj]
    used: set[Edge] = set()
    out = []

    def walk(start, first):
        path = [start, first]
        used.add((min(start, first), max(start, first)))
        prev, cur = start, first
        while deg[cur] == 2 and cur != start:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            used.add((min(cur, nxt), max(cur, nxt)))
            prev, cur = cur, nxt
            path.append(cur)
        return path

    for u in range(g.vertex_count):
        if deg[u] == 2:
            continue
        for w in adj[u]:
            if (min(u, w), max(u, w)) not in used:
                out.append(walk(u, w))
    # whatever is left lies on components that are bare cycles
    for u, w in g.edges:
        if (u, w) not in used:
            out.append(walk(u, w))
    return out


def _required_length(path: list[int], deg: list[int], n_tokens: int) -> int:
    a, b = deg[path[0]], deg[path[-1]]
    if a == 2 and b == 2:  # bare cycle
        return n_tokens + 1
    if a >= 3 and b >= 3:
        return n_tokens + 1
    return n_tokens


def _split_edges(g: Graph, plan: list[tuple[Edge, int]]) -> Graph:
    edges = set(g.edges)
    labels = g.label_map()
    nv = g.vertex_count
    for (u, w), k in plan:
        if k <= 0:
            continue
        edges.discard((min(u, w), max(u, w)))
        chain = [u] + list(range(nv, nv + k)) + [w]
        for x in range(nv, nv + k):
            labels[x] = SUBDIVISION
        nv += k
        edges.update((min(a, b), max(a, b)) for a, b in zip(chain, chain[1:]))
    return Graph(nv, tuple(edges), labels)


def subdivide_for(g: Graph, n_tokens: int) -> Graph:
    """Insert degree-2 vertices until the discrete configuration complex of
    ``n_tokens`` points is a faithful model of the topological one.

    Segments joining essential vertices (and closed segments) get at least
    ``n_tokens + 1`` edges; segments ending at a leaf get at least
    ``n_tokens``.  Only the deficit is inserted, always into the first edge of
    the segment, so the result is deterministic and idempotent.
    """
    if n_tokens < 1:
        raise InvalidParameter("n_tokens must be positive")
    if not g.is_connected():
        raise InvalidInput("subdivide_for needs a connected graph")
    deg = g.degrees()
    plan = []
    for path in segments(g):
        need = _required_length(path, deg, n_tokens) - (len(path) - 1)
        if need > 0:
            plan.append(((path[0], path[1]), need))
    return _split_edges(g, plan) if plan else g


def lengthen_segments(g: Graph, extra: int = 1) -> Graph:
    """Insert ``extra`` more vertices into every segment of ``g``."""
    return _split_edges(g, [((p[0], p[1]), extra) for p in segments(g)])


def smooth(g: Graph) -> Graph:
    """Contract every degree-2 vertex labelled as a subdivision vertex.

    Surviving vertices keep their relative order, so this inverts
    :func:`subdivide_for` exactly.
    """
    adj = [set(a) for a in g.adjacency()]
    labels = g.label_map()
    removed = set()
    for v in range(g.vertex_count):
        if labels.get(v) != SUBDIVISION or len(adj[v]) != 2:
            continue
        a, b = sorted(adj[v])
        if b in adj[a]:
            raise InvalidInput(f"smoothing vertex {v} would create a double edge")
        adj[a].discard(v)
        adj[b].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        adj[v] = set()
        removed.add(v)
    keep = [v for v in range(g.vertex_count) if v not in removed]
    new_id = {v: i for i, v in enumerate(keep)}
    edges = {(min(new_id[u], new_id[w]), max(new_id[u], new_id[w]))
             for u in keep for w in adj[u]}
    new_labels = {new_id[v]: r for v, r in labels.items() if v in new_id}
    return Graph(len(keep), tuple(edges), new_labels)


def from_edges(edges: Iterable[Edge], vertex_count: int | None = None) -> Graph:
    edges = list(edges)
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edges), default=-1)
    return Graph(vertex_count, tuple(edges))
