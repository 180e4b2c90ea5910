"""Words, finite presentations and fundamental groups of square complexes.

A word is a tuple of nonzero ints: ``k`` stands for generator ``k - 1`` and
``-k`` for its inverse.
"""
from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .config_space import ConfigComplex, connected_components
from .errors import InvalidInput, NotConnected
from .smith import invariant_factors

Word = tuple[int, ...]

_NAME = re.compile(r"^[^\s,^]+$")


def free_reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Iterable[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def exponent_sums(w: Iterable[int]) -> dict[int, int]:
    """Exponent sum per 0-based generator index."""
    out: dict[int, int] = {}
    for x in w:
        g = abs(x) - 1
        out[g] = out.get(g, 0) + (1 if x > 0 else -1)
    return {g: v for g, v in out.items() if v}


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        names = tuple(self.generator_names)
        for name in names:
            if not _NAME.match(name) or name == "1":
                raise InvalidInput(f"bad generator name {name!r}")
        if len(set(names)) != len(names):
            raise InvalidInput("duplicate generator names")
        rels = []
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > len(names):
                    raise InvalidInput(f"letter {x} out of range in relator {tuple(r)}")
            rels.append(cyclic_reduce(r))
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def rank(self) -> int:
        return len(self.generator_names)

    def index(self, name: str) -> int:
        return self.generator_names.index(name)

    def word(self, text: str) -> Word:
        """Parse ``"a b^-1 a"`` into a reduced word over this presentation."""
        return free_reduce(_parse_word(text, {n: i for i, n in enumerate(self.generator_names)}))

    def format_word(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        return " ".join(self.generator_names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in w)

    def exponent_matrix(self) -> list[dict[int, int]]:
        return [exponent_sums(r) for r in self.relators]

    def to_text(self) -> str:
        lines = ["gens: " + ",".join(self.generator_names)]
        lines.extend(self.format_word(r) for r in self.relators)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines or not lines[0].startswith("gens:"):
            raise InvalidInput("presentation text must start with 'gens:'")
        head = lines[0][len("gens:"):].strip()
        names = [n.strip() for n in head.split(",")] if head else []
        lookup = {n: i for i, n in enumerate(names)}
        return cls(tuple(names), tuple(_parse_word(ln, lookup) for ln in lines[1:]))

    def to_dict(self) -> dict:
        return {"generators": list(self.generator_names),
                "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Presentation":
        try:
            return cls(tuple(data["generators"]),
                       tuple(tuple(int(x) for x in r) for r in data.get("relators", [])))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed presentation JSON: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _parse_word(text: str, lookup: Mapping[str, int]) -> Word:
    out: list[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        name, exp = tok, 1
        if "^" in tok:
            name, e = tok.rsplit("^", 1)
            try:
                exp = int(e)
            except ValueError:
                raise InvalidInput(f"bad exponent in {tok!r}") from None
        if name not in lookup:
            raise InvalidInput(f"unknown generator {name!r}")
        letter = lookup[name] + 1
        out.extend([letter if exp > 0 else -letter] * abs(exp))
    return tuple(out)


def free_group(*names: str) -> Presentation:
    return Presentation(tuple(names))


def abelian_invariants(p: Presentation) -> tuple[int, list[int]]:
    """Betti number and torsion coefficients of the abelianization."""
    factors = invariant_factors(p.exponent_matrix())
    return p.rank - len(factors), [d for d in factors if d > 1]


@dataclass(frozen=True)
class PresHom:
    """Homomorphism given by the image of every source generator.

    Construction checks that source relators die in the target's
    abelianization; full triviality in the target is not decided.
    """

    source: Presentation
    target: Presentation
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise InvalidInput(f"need {self.source.rank} generator images, got {len(self.images)}")
        images = []
        for w in self.images:
            for x in w:
                if x == 0 or abs(x) > self.target.rank:
                    raise InvalidInput(f"image letter {x} out of range")
            images.append(free_reduce(w))
        object.__setattr__(self, "images", tuple(images))
        if self.source.relators:
            before = abelian_invariants(self.target)
            after = abelian_invariants(Presentation(
                self.target.generator_names,
                self.target.relators + tuple(self(r) for r in self.source.relators)))
            # f.g. abelian groups are Hopfian: equal invariants means the
            # extra relators were already in the relation lattice
            if before != after:
                raise InvalidInput("a source relator is not trivial in the target abelianization")

    def __call__(self, w: Sequence[int]) -> Word:
        return apply_hom(self, w)

    @classmethod
    def identity(cls, p: Presentation) -> "PresHom":
        return cls(p, p, tuple((i + 1,) for i in range(p.rank)))

    @classmethod
    def by_names(cls, source: Presentation, target: Presentation,
                 images: Mapping[str, str]) -> "PresHom":
        return cls(source, target, tuple(target.word(images.get(n, "1")) for n in source.generator_names))


def apply_hom(h: PresHom, w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if x == 0 or abs(x) > h.source.rank:
            raise InvalidInput(f"letter {x} out of range for the source")
        img = h.images[abs(x) - 1]
        out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)


def spanning_tree(cx: ConfigComplex) -> set[int]:
    """BFS tree of the 1-skeleton from the base 0-cell (1-cell indices)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in cx.zero_cells]
    for e, (_, t, h) in enumerate(cx.one_cells):
        adj[t].append((e, h))
        adj[h].append((e, t))
    seen = [False] * len(cx.zero_cells)
    seen[cx.base] = True
    tree = set()
    queue = deque([cx.base])
    while queue:
        u = queue.popleft()
        for e, w in adj[u]:
            if not seen[w]:
                seen[w] = True
                tree.add(e)
                queue.append(w)
    if len(tree) != len(cx.zero_cells) - 1:
        k, _ = connected_components(cx)
        raise NotConnected(f"1-skeleton has {k} components")
    return tree


def square_walk(cx: ConfigComplex, square: int) -> list[tuple[int, int]]:
    """Boundary of a 2-cell as ``(1-cell, ±1)`` steps.

    Starts at the smallest corner and leaves along its smaller 1-cell.
    """
    _, bd = cx.two_cells[square]
    ends = {e: cx.one_cells[e][1:] for e in bd}
    start = min(v for e in bd for v in ends[e])
    edge = min(e for e in bd if start in ends[e])
    steps = []
    cur = start
    for _ in range(4):
        t, h = ends[edge]
        if t == cur:
            steps.append((edge, 1))
            cur = h
        else:
            steps.append((edge, -1))
            cur = t
        edge = next(e for e in bd if e != edge and cur in ends[e])
    return steps


def fundamental_presentation(cx: ConfigComplex, tree: set[int] | None = None) -> Presentation:
    """pi_1 of the complex at its base: one generator per non-tree 1-cell,
    one relator per square."""
    if tree is None:
        tree = spanning_tree(cx)
    gens = [e for e in range(len(cx.one_cells)) if e not in tree]
    letter = {e: i + 1 for i, e in enumerate(gens)}
    names = tuple("e[" + cx.one_cells[e][0].label() + "]" for e in gens)
    rels = []
    for s in range(len(cx.two_cells)):
        rels.append(tuple(sign * letter[e] for e, sign in square_walk(cx, s) if e in letter))
    return Presentation(names, tuple(rels))
