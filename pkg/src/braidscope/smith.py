"""Exact integer Smith normal form for sparse matrices.

Matrices are given as a list of rows, each row a ``{column: value}`` dict.
Unit pivots are taken first (shortest row, then sparsest column) so the big
boundary matrices of configuration complexes reduce with little fill-in; what
is left afterwards is finished densely with the usual Euclidean steps, always
pivoting on the entry of smallest magnitude.
"""
from __future__ import annotations

import heapq
from collections import defaultdict
from math import gcd
from typing import Iterable, Mapping, Sequence


def _as_rows(rows: Iterable[Mapping[int, int] | Sequence[int]]) -> dict[int, dict[int, int]]:
    out = {}
    for i, r in enumerate(rows):
        if not isinstance(r, Mapping):
            r = dict(enumerate(r))
        r = {c: int(v) for c, v in r.items() if v}
        if r:
            out[i] = r
    return out


def _eliminate_units(rows: dict[int, dict[int, int]]) -> int:
    """Pivot on ±1 entries until none is left; returns the number of pivots."""
    cols: dict[int, set[int]] = defaultdict(set)
    for i, r in rows.items():
        for c in r:
            cols[c].add(i)
    heap = [(len(r), i) for i, r in rows.items()]
    heapq.heapify(heap)
    pivots = 0
    while heap:
        length, i = heapq.heappop(heap)
        r = rows.get(i)
        if r is None or len(r) != length:
            continue
        units = [c for c, v in r.items() if v in (1, -1)]
        if not units:
            continue
        c = min(units, key=lambda k: (len(cols[k]), k))
        p = r[c]
        del rows[i]
        for k in r:
            cols[k].discard(i)
        for j in sorted(cols[c]):
            rj = rows[j]
            f = rj[c] * p
            for k, v in r.items():
                nv = rj.get(k, 0) - f * v
                if nv:
                    if k not in rj:
                        cols[k].add(j)
                    rj[k] = nv
                elif k in rj:
                    del rj[k]
                    cols[k].discard(j)
            if rj:
                heapq.heappush(heap, (len(rj), j))
            else:
                del rows[j]
        del cols[c]
        pivots += 1
    return pivots


def _dense_diagonal(m: list[list[int]]) -> list[int]:
    nr = len(m)
    nc = len(m[0]) if m else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i, j = best
            m[t], m[i] = m[i], m[t]
            for row in m:
                row[t], row[j] = row[j], row[t]
            p = m[t][t]
            clean = True
            for i in range(t + 1, nr):
                if m[i][t]:
                    q = m[i][t] // p
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    clean = clean and m[i][t] == 0
            for j in range(t + 1, nc):
                if m[t][j]:
                    q = m[t][j] // p
                    for row in m:
                        row[j] -= q * row[t]
                    clean = clean and m[t][j] == 0
            if clean:
                break
            cand = [(i, t) for i in range(t + 1, nr) if m[i][t]] + \
                   [(t, j) for j in range(t + 1, nc) if m[t][j]]
            best = min(cand, key=lambda ij: abs(m[ij[0]][ij[1]]))
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def _divisibility_chain(ds: list[int]) -> list[int]:
    ds = list(ds)
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            g = gcd(ds[i], ds[j])
            ds[i], ds[j] = g, ds[i] * ds[j] // g
    return ds


def invariant_factors(rows: Iterable[Mapping[int, int] | Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    work = _as_rows(rows)
    units = _eliminate_units(work)
    rest = []
    if work:
        colset = sorted({c for r in work.values() for c in r})
        pos = {c: k for k, c in enumerate(colset)}
        dense = []
        for i in sorted(work):
            row = [0] * len(colset)
            for c, v in work[i].items():
                row[pos[c]] = v
            dense.append(row)
        rest = _divisibility_chain(_dense_diagonal(dense))
    return [1] * units + rest


def matrix_rank(rows: Iterable[Mapping[int, int] | Sequence[int]]) -> int:
    return len(invariant_factors(rows))


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Dense Smith normal form (diagonal matrix of the same shape)."""
    nr = len(matrix)
    nc = len(matrix[0]) if nr else 0
    factors = invariant_factors(matrix)
    out = [[0] * nc for _ in range(nr)]
    for k, d in enumerate(factors):
        out[k][k] = d
    return out
