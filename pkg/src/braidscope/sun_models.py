"""Expected ranks for the star / sun families and the harness that checks them.

Three families are covered:

``star3_ntokens``  n tokens on the 3-star; free of rank n(n-1)/2.
``sun1_ntokens``   n tokens on the one-ray sun graph; free of rank n.
``sun_k_2tokens``  2 tokens on the k-ray sun graph; free of rank k+1.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import product
from math import comb
from typing import Iterable

from .config_space import enumerate_complex, euler_characteristic
from .errors import BraidscopeError, InvalidParameter
from .graph import JUNCTION, LEAF, Graph, make_star, make_sun, subdivide_for
from .presentation import fundamental_presentation
from .tietze import DEFAULT_BUDGET, certify_free

FAMILIES = ("star3_ntokens", "sun1_ntokens", "sun_k_2tokens")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameter: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        low = 1 if self.family == "sun_k_2tokens" else 2
        if self.parameter < low:
            raise InvalidParameter(f"{self.family} needs parameter >= {low}")

    @property
    def tokens(self) -> int:
        return 2 if self.family == "sun_k_2tokens" else self.parameter

    def graph(self) -> Graph:
        """The unsubdivided graph of this instance."""
        if self.family == "star3_ntokens":
            return make_star(3)
        if self.family == "sun1_ntokens":
            return make_sun(1)
        return make_sun(self.parameter)


def expected_rank(spec: FamilySpec) -> int:
    n = spec.parameter
    if spec.family == "star3_ntokens":
        return n * (n - 1) // 2
    if spec.family == "sun1_ntokens":
        return n
    return n + 1


def star_generator_index_set(n: int) -> list[tuple[int, int, int]]:
    """Arm occupancies (a1, a2, a3) indexing a free basis of B_n(S_3).

    These are the type I vertices with a3 > 1, i.e. a1 + a2 + a3 = n + 2,
    a1, a2 >= 1, a3 >= 2, listed lexicographically.
    """
    if n < 2:
        raise InvalidParameter("star_generator_index_set needs n >= 2")
    return [(a1, a2, n + 2 - a1 - a2)
            for a1 in range(1, n + 1) for a2 in range(1, n + 1)
            if n + 2 - a1 - a2 >= 2]


def type_one_vertices(n: int) -> list[tuple[int, int, int]]:
    return [t for t in product(range(1, n + 1), repeat=3) if sum(t) == n + 2]


def type_two_vertices(n: int) -> list[tuple[int, int, int]]:
    return [t for t in product(range(n + 1), repeat=3) if sum(t) == n]


def fine_sun1_graph(n: int) -> Graph:
    """One-ray sun graph cut into 4n-2 circle edges and a ray of 2n-2 edges.

    Vertex 0 is the junction, 1..4n-3 run around the circle, and the ray
    vertices follow outwards with the last one the leaf.
    """
    if n < 2:
        raise InvalidParameter("fine_sun1_graph needs n >= 2")
    c = 4 * n - 2
    r = 2 * n - 2
    edges = [(i, (i + 1) % c) for i in range(c)]
    chain = [0] + list(range(c, c + r))
    edges += list(zip(chain, chain[1:]))
    return Graph(c + r, tuple(edges), {0: JUNCTION, c + r - 1: LEAF})


def star_base_configuration(g: Graph, n: int) -> list[int]:
    """The n vertices of the first arm nearest its leaf, i.e. occupancy (n, 1, 1)
    read on the subdivided 3-star with the other two tokens' arms left empty.

    The first arm is the one ending at the smallest leaf.
    """
    adj = g.adjacency()
    leaves = [v for v in range(g.vertex_count) if len(adj[v]) == 1]
    if not leaves:
        raise InvalidParameter("graph has no leaf")
    path = [leaves[0]]
    prev = None
    while len(path) < n:
        cur = path[-1]
        nxt = [w for w in adj[cur] if w != prev]
        if len(nxt) != 1 or len(adj[nxt[0]]) > 2:
            raise InvalidParameter("first arm is too short for the requested tokens")
        prev = cur
        path.append(nxt[0])
    return sorted(path)


@dataclass(frozen=True)
class InstanceReport:
    family: str
    param: int
    expected: int
    computed: int | None
    chi: int
    consistent: bool
    status: str

    def as_row(self) -> str:
        computed = "unknown" if self.computed is None else str(self.computed)
        return (f"{self.family:<14} {self.param:>5} {self.expected:>8} {computed:>8} "
                f"{self.chi:>6} {str(self.consistent):>10} {self.status:>6}")


def run_instance(spec: FamilySpec, budget: int = DEFAULT_BUDGET) -> InstanceReport:
    n = spec.tokens
    try:
        g = subdivide_for(spec.graph(), n)
        rank = certify_free(fundamental_presentation(enumerate_complex(g, n)), budget)
        chi = euler_characteristic(g, n)
    except BraidscopeError as exc:
        raise type(exc)(f"{spec.family}({spec.parameter}): {exc}") from exc
    expected = expected_rank(spec)
    consistent = rank is not None and rank == 1 - chi
    ok = consistent and rank == expected
    return InstanceReport(spec.family, spec.parameter, expected, rank, chi, consistent,
                          "pass" if ok else "FAIL")


def verify_family(family: str, params: Iterable[int], budget: int = DEFAULT_BUDGET) -> list[InstanceReport]:
    return [run_instance(FamilySpec(family, p), budget) for p in sorted(params)]


def report_table(reports: list[InstanceReport]) -> str:
    head = f"{'family':<14} {'param':>5} {'expected':>8} {'computed':>8} {'chi':>6} {'consistent':>10} {'status':>6}"
    return "\n".join([head] + [r.as_row() for r in reports]) + "\n"


def report_json(reports: list[InstanceReport]) -> str:
    return json.dumps([asdict(r) for r in reports], indent=2)


def closed_form_counts(n: int) -> dict[str, int]:
    return {"type_one": comb(n + 1, 2), "type_two": comb(n + 2, 2), "generators": comb(n, 2)}
