"""Van Kampen pushouts over a possibly disconnected intersection.

For ``X = A ∪ B`` with ``A ∩ B`` split into components ``C_0 .. C_n``, the
fundamental group of ``X`` is the free product of the groups of ``A`` and
``B`` with free letters ``t_1 .. t_n``, modulo ``j_A(s) t_i j_B(s)^-1 t_i^-1``
for every generator ``s`` of every ``C_i`` (``t_0`` is the identity).  The
topological hypotheses are the caller's business; everything here works on
presentations only.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InvalidInput, InvalidParameter
from .presentation import PresHom, Presentation, Word, apply_hom, free_reduce, inverse


@dataclass(frozen=True)
class Component:
    pres: Presentation
    to_a: PresHom
    to_b: PresHom


@dataclass(frozen=True)
class GvkInput:
    pres_a: Presentation
    pres_b: Presentation
    components: tuple[Component, ...]
    t_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if not self.components:
            raise InvalidInput("need at least the base component")
        for i, c in enumerate(self.components):
            if c.to_a.source != c.pres or c.to_b.source != c.pres:
                raise InvalidInput(f"component {i}: homomorphism source is not the component")
            if c.to_a.target != self.pres_a:
                raise InvalidInput(f"component {i}: first homomorphism does not land in A")
            if c.to_b.target != self.pres_b:
                raise InvalidInput(f"component {i}: second homomorphism does not land in B")
        if self.t_names is not None and len(self.t_names) != len(self.components) - 1:
            raise InvalidInput("need one t name per non-base component")

    @classmethod
    def from_dict(cls, data: Mapping) -> "GvkInput":
        try:
            a = Presentation.from_dict(data["A"])
            b = Presentation.from_dict(data["B"])
            comps = []
            for c in data["components"]:
                pc = Presentation.from_dict(c["C"])
                comps.append(Component(
                    pc,
                    PresHom(pc, a, tuple(tuple(w) for w in c["to_A"])),
                    PresHom(pc, b, tuple(tuple(w) for w in c["to_B"]))))
            t_names = data.get("t_names")
            return cls(a, b, tuple(comps), tuple(t_names) if t_names is not None else None)
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed pushout JSON: {exc}") from exc

    def to_dict(self) -> dict:
        out = {
            "A": self.pres_a.to_dict(),
            "B": self.pres_b.to_dict(),
            "components": [{"C": c.pres.to_dict(),
                            "to_A": [list(w) for w in c.to_a.images],
                            "to_B": [list(w) for w in c.to_b.images]}
                           for c in self.components],
        }
        if self.t_names is not None:
            out["t_names"] = list(self.t_names)
        return out

    @classmethod
    def from_json(cls, text: str) -> "GvkInput":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def gvk_pushout(inp: GvkInput) -> Presentation:
    a, b = inp.pres_a, inp.pres_b
    n = len(inp.components) - 1
    t_names = inp.t_names if inp.t_names is not None else tuple(f"t_{i}" for i in range(1, n + 1))
    names = a.generator_names + b.generator_names + tuple(t_names)
    if len(set(names)) != len(names):
        raise InvalidInput("generator names of A, B and the t letters must be distinct")
    shift = a.rank

    def in_b(w: Word) -> Word:
        return tuple(x + shift if x > 0 else x - shift for x in w)

    rels = list(a.relators) + [in_b(r) for r in b.relators]
    for i, comp in enumerate(inp.components):
        t = () if i == 0 else (a.rank + b.rank + i,)
        for g in range(1, comp.pres.rank + 1):
            wa = comp.to_a.images[g - 1]
            wb = in_b(comp.to_b.images[g - 1])
            rels.append(free_reduce(wa + t + inverse(wb) + inverse(t)))
    return Presentation(names, tuple(rels))


def _triples(total: int) -> list[tuple[int, int, int]]:
    """(i, j, k) with i, j >= 1, k >= 2 and i + j + k == total, lexicographic."""
    return [(i, j, total - i - j)
            for i in range(1, total) for j in range(1, total - i)
            if total - i - j >= 2]


def _name(letter: str, ijk) -> str:
    return f"{letter}_{ijk[0]}_{ijk[1]}_{ijk[2]}"


def sun1_symbolic(n: int) -> Presentation:
    """Pushout presentation of the n-point braid group of the one-ray sun graph.

    ``A`` is free on alpha_{i,j,k} (sum n+1), ``B`` free on beta_{i,j,k}
    (sum n+2); the two intersection components map gamma_{i,j,k} to
    beta_{i,j,k+1} and delta_{i,j,k} to beta_{i,j+1,k}, joined by one letter t.
    """
    if n < 2:
        raise InvalidParameter("sun1_symbolic needs n >= 2")
    alphas = _triples(n + 1)
    betas = _triples(n + 2)
    pa = Presentation(tuple(_name("alpha", x) for x in alphas))
    pb = Presentation(tuple(_name("beta", x) for x in betas))
    beta_at = {x: i + 1 for i, x in enumerate(betas)}
    to_a = PresHom(Presentation(tuple(_name("gamma", x) for x in alphas)), pa,
                   tuple((i + 1,) for i in range(len(alphas))))
    pc = to_a.source
    pd = Presentation(tuple(_name("delta", x) for x in alphas))
    comps = (
        Component(pc, to_a, PresHom(pc, pb, tuple((beta_at[(i, j, k + 1)],) for i, j, k in alphas))),
        Component(pd, PresHom(pd, pa, to_a.images),
                  PresHom(pd, pb, tuple((beta_at[(i, j + 1, k)],) for i, j, k in alphas))),
    )
    return gvk_pushout(GvkInput(pa, pb, comps, ("t",)))


def wedge_example() -> GvkInput:
    """Two circles glued at a point."""
    a, b, c = Presentation(("a",)), Presentation(("b",)), Presentation(())
    return GvkInput(a, b, (Component(c, PresHom(c, a, ()), PresHom(c, b, ())),))


def two_arcs_example() -> GvkInput:
    """Two contractible pieces meeting in two contractible components."""
    a, b, c = Presentation(()), Presentation(()), Presentation(())
    comp = Component(c, PresHom(c, a, ()), PresHom(c, b, ()))
    return GvkInput(a, b, (comp, comp))
