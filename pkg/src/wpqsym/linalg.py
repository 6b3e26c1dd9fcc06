"""Exact Gaussian elimination over the rationals for sparse row vectors."""

from __future__ import annotations

import heapq

from .scalar import as_scalar as _q


def rank(rows) -> int:
    """Rank of a list of sparse rows (``dict`` column -> value)."""
    return len(echelon(rows)[0])


def echelon(rows):
    """Return ``(basis, pivots)``: reduced rows keyed by their pivot column.

    Rows are reduced in order; ``pivots`` lists the indices of the input rows
    that were independent of the earlier ones.
    """
    basis: dict = {}
    kept = []
    for idx, row in enumerate(rows):
        r = reduce(basis, row)
        if r:
            col = min(r)
            inv = 1 / r[col]
            r = {k: v * inv for k, v in r.items()}
            basis[col] = r
            kept.append(idx)
    return basis, kept


def reduce(basis: dict, row) -> dict:
    r = {k: _q(v) for k, v in dict(row).items() if v}
    while True:
        hit = [c for c in r if c in basis]
        if not hit:
            return r
        col = min(hit)
        f = r[col]
        for k, v in basis[col].items():
            nv = r.get(k, 0) - f * v
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)


def in_span(basis: dict, row) -> bool:
    return not reduce(basis, row)


class Eliminator:
    """Echelon form of a fixed column list, reusable across targets.

    Each stored row keeps the multipliers of the earlier rows it was reduced
    by, so a solution is recovered by back substitution instead of carrying a
    dense combination through the elimination.
    """

    def __init__(self, columns):
        self.basis: dict = {}  # pivot -> normalised row
        self.order: list = []  # (pivot, column index, inverse, multipliers by pivot)
        for idx, col in enumerate(columns):
            r, hits = _reduce_logged(self.basis, col)
            if r:
                p = min(r)
                inv = 1 / r[p]
                self.basis[p] = {k: v * inv for k, v in r.items()}
                self.order.append((p, idx, inv, hits))

    def solve(self, target):
        r, z = _reduce_logged(self.basis, target)
        if r:
            return None
        x: dict = {}
        for p, idx, inv, hits in reversed(self.order):
            zp = z.get(p)
            if not zp:
                continue
            c = zp * inv
            x[idx] = c
            for q, f in hits.items():
                z[q] = z.get(q, 0) - c * f
        return {k: v for k, v in sorted(x.items()) if v}


def _reduce_logged(basis, row):
    # stored rows only hold keys at or above their pivot, so pivots can be
    # taken from a heap in increasing order
    r = {k: _q(v) for k, v in dict(row).items() if v}
    hits: dict = {}
    heap = [k for k in r if k in basis]
    heapq.heapify(heap)
    while heap:
        col = heapq.heappop(heap)
        f = r.get(col)
        if not f:
            continue
        hits[col] = hits.get(col, 0) + f
        for k, v in basis[col].items():
            old = r.get(k)
            nv = (old or 0) - f * v
            if nv:
                r[k] = nv
                if old is None and k in basis:
                    heapq.heappush(heap, k)
            else:
                r.pop(k, None)
    return r, hits
