"""Greedy Tietze simplification and free-rank certification.

The pivot rule is fixed so results are reproducible: the shortest relator is
processed first (ties by relator position), and inside it the lowest-indexed
generator that occurs exactly once is solved for and substituted everywhere.
When no relator has such a generator, relators are shortened against each
other (replacing more than half of a relator by the inverse of the rest) and
elimination resumes.
"""
from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from dataclasses import dataclass

from .presentation import Presentation, Word, cyclic_reduce, inverse

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class TietzeResult:
    presentation: Presentation
    converged: bool
    steps: int
    eliminated: tuple[str, ...]

    @property
    def free_rank(self) -> int | None:
        if self.converged and not self.presentation.relators:
            return self.presentation.rank
        return None


class _Simplifier:
    def __init__(self, p: Presentation, budget: int):
        self.p = p
        self.budget = budget
        self.steps = 0
        self.rels: dict[int, Word] = {}
        self.occ: dict[int, set[int]] = defaultdict(set)
        self.heap: list[tuple[int, int]] = []
        self.dead: list[int] = []
        for rid, w in enumerate(p.relators):
            self._set(rid, w)

    @property
    def exhausted(self) -> bool:
        return self.steps >= self.budget

    def _set(self, rid: int, w: Word):
        old = self.rels.pop(rid, ())
        for g in {abs(x) for x in old}:
            self.occ[g].discard(rid)
        w = cyclic_reduce(w)
        if not w:
            return
        self.rels[rid] = w
        for g in {abs(x) for x in w}:
            self.occ[g].add(rid)
        heapq.heappush(self.heap, (len(w), rid))

    @staticmethod
    def _pivot(w: Word) -> int | None:
        once = [g for g, c in Counter(abs(x) for x in w).items() if c == 1]
        return min(once) if once else None

    def _substitute(self, rid: int, g: int):
        w = self.rels[rid]
        pos = next(i for i, x in enumerate(w) if abs(x) == g)
        rest = w[pos + 1:] + w[:pos]
        rep = inverse(rest) if w[pos] > 0 else rest
        irep = inverse(rep)
        self._set(rid, ())
        for other in sorted(self.occ.pop(g, ())):
            new: list[int] = []
            for x in self.rels[other]:
                if x == g:
                    new.extend(rep)
                elif x == -g:
                    new.extend(irep)
                else:
                    new.append(x)
            self._set(other, tuple(new))
            self.steps += 1
        self.dead.append(g)
        self.steps += 1

    def eliminate(self) -> bool:
        changed = False
        while self.heap and not self.exhausted:
            length, rid = heapq.heappop(self.heap)
            w = self.rels.get(rid)
            if w is None or len(w) != length:
                continue
            g = self._pivot(w)
            if g is not None:
                self._substitute(rid, g)
                changed = True
        return changed

    def shorten(self) -> bool:
        changed = False
        for rid in sorted(self.rels, key=lambda r: (len(self.rels[r]), r)):
            w = self.rels.get(rid)
            if w is None:
                continue
            gens = {abs(x) for x in w}
            targets = sorted({r for g in gens for r in self.occ[g]} - {rid})
            for other in targets:
                if self.exhausted:
                    return changed
                self.steps += 1
                while other in self.rels and self._reduce_by(self.rels[other], w, other):
                    changed = True
        return changed

    def _reduce_by(self, s: Word, w: Word, sid: int) -> bool:
        n, m = len(w), len(s)
        for q in _rotations(w):
            for k in range(min(n, m), n // 2, -1):
                piece = q[:k]
                ss = s + s[:k - 1]
                for i in range(m):
                    if ss[i:i + k] == piece:
                        rot = s[i:] + s[:i]
                        self._set(sid, inverse(q[k:]) + rot[k:])
                        return True
        return False

    def run(self) -> TietzeResult:
        while True:
            self.eliminate()
            if self.exhausted or not self.rels or not self.shorten():
                break
        dead = set(self.dead)
        live = [g for g in range(1, self.p.rank + 1) if g not in dead]
        new_index = {g: i + 1 for i, g in enumerate(live)}
        rels = tuple(tuple(new_index[abs(x)] * (1 if x > 0 else -1) for x in self.rels[r])
                     for r in sorted(self.rels))
        names = tuple(self.p.generator_names[g - 1] for g in live)
        converged = not self.rels or not self.exhausted
        return TietzeResult(Presentation(names, rels), converged, self.steps,
                            tuple(self.p.generator_names[g - 1] for g in self.dead))


def _rotations(w: Word):
    for v in (w, inverse(w)):
        for i in range(len(v)):
            yield v[i:] + v[:i]


def tietze_simplify(p: Presentation, budget: int = DEFAULT_BUDGET) -> TietzeResult:
    return _Simplifier(p, budget).run()


def certify_free(p: Presentation, budget: int = DEFAULT_BUDGET) -> int | None:
    """Free rank if greedy simplification removes every relator, else None."""
    return tietze_simplify(p, budget).free_rank
