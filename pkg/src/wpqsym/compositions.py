"""Weak compositions: statistics, order relations, structural maps, mutations.

A weak composition is represented as a plain ``tuple`` of non-negative
integers.  Trailing zeros are significant, so ``(1, 0) != (1,)``.  Positions
refer to the cell layout of ``alpha`` in which every zero occupies one cell
and a positive part ``s`` occupies ``s`` cells; there are ``total_weight``
cells in all.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

WeakComposition = tuple  # tuple[int, ...]

EMPTY: WeakComposition = ()


class InternalInconsistency(AssertionError):
    """A constructed object violated an invariant it is built to satisfy."""


def make(parts: Iterable[int]) -> WeakComposition:
    alpha = tuple(parts)
    for p in alpha:
        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError(f"parts must be integers, got {p!r}")
        if p < 0:
            raise ValueError(f"parts must be non-negative, got {p}")
    return alpha


# -- statistics ---------------------------------------------------------------


def weight(alpha: WeakComposition) -> int:
    return sum(alpha)


def length(alpha: WeakComposition) -> int:
    return len(alpha)


def zero_length(alpha: WeakComposition) -> int:
    return alpha.count(0)


def total_weight(alpha: WeakComposition) -> int:
    return sum(alpha) + alpha.count(0)


def stats(alpha: WeakComposition) -> tuple[int, int, int, int]:
    """Return ``(weight, length, zero_length, total_weight)``."""
    return weight(alpha), length(alpha), zero_length(alpha), total_weight(alpha)


def sort_key(alpha: WeakComposition):
    """Deterministic ordering used for all printed output."""
    return (weight(alpha), total_weight(alpha), len(alpha), alpha)


def is_composition(alpha: WeakComposition) -> bool:
    return 0 not in alpha


def is_zeros(alpha: WeakComposition) -> bool:
    return not any(alpha)


def descent_set(alpha: WeakComposition) -> frozenset[int]:
    """Cells that end a positive part; zero cells only shift positions."""
    out = []
    pos = 0
    for p in alpha:
        if p == 0:
            pos += 1
        else:
            pos += p
            out.append(pos)
    return frozenset(out)


def peak_set(alpha: WeakComposition) -> frozenset[int]:
    d = descent_set(alpha)
    n = total_weight(alpha)
    return frozenset(i for i in d if 2 <= i <= n - 1 and i - 1 not in d)


def composition_from_descents(n: int, descents: Iterable[int]) -> WeakComposition:
    """The composition of ``n`` whose partial sums are ``descents`` (plus ``n``)."""
    cuts = sorted(set(descents) | {n})
    if n == 0:
        return EMPTY
    out, prev = [], 0
    for c in cuts:
        if not prev < c <= n:
            raise ValueError(f"descent {c} outside [1, {n}]")
        out.append(c - prev)
        prev = c
    return tuple(out)


# -- structural maps -------------------------------------------------------------


def reverse(alpha: WeakComposition) -> WeakComposition:
    return alpha[::-1]


def bar(alpha: WeakComposition) -> WeakComposition:
    return tuple(p for p in alpha if p)


def concat(alpha: WeakComposition, beta: WeakComposition) -> WeakComposition:
    return alpha + beta


def near_concat(alpha: WeakComposition, beta: WeakComposition) -> WeakComposition:
    if not alpha or not beta:
        raise ValueError("near concatenation needs two nonempty weak compositions")
    return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]


def complement(alpha: WeakComposition) -> WeakComposition:
    """Replace each part ``a`` by ``1^a`` (``0`` for ``a = 0``) and glue
    neighbouring positive parts by near concatenation."""
    out: list[int] = []
    prev_positive = False
    for a in alpha:
        if a == 0:
            out.append(0)
            prev_positive = False
            continue
        ones = [1] * a
        if prev_positive:
            out[-1] += ones[0]
            out.extend(ones[1:])
        else:
            out.extend(ones)
        prev_positive = True
    return tuple(out)


def transpose(alpha: WeakComposition) -> WeakComposition:
    return complement(reverse(alpha))


# -- block structure ----------------------------------------------------------------


@dataclass(frozen=True)
class BlockStructure:
    """``0^leading_zeros, run_1, 0^z_1, run_2, ...`` with maximal positive runs.

    ``positions[q]`` is the half-open cell interval ``(c, d]`` of block ``q``.
    """

    leading_zeros: int
    blocks: tuple[tuple[WeakComposition, int], ...]
    positions: tuple[tuple[int, int], ...]

    @property
    def zero_runs(self) -> tuple[int, ...]:
        """``(i_1, ..., i_{k+1})``: the zero run before each block, then the tail."""
        return (self.leading_zeros,) + tuple(z for _, z in self.blocks)

    @property
    def runs(self) -> tuple[WeakComposition, ...]:
        return tuple(r for r, _ in self.blocks)

    def rebuild(self) -> WeakComposition:
        out = [0] * self.leading_zeros
        for run, z in self.blocks:
            out.extend(run)
            out.extend([0] * z)
        return tuple(out)


def block_structure(alpha: WeakComposition) -> BlockStructure:
    i = 0
    n = len(alpha)
    while i < n and alpha[i] == 0:
        i += 1
    leading = i
    pos = leading
    blocks, positions = [], []
    while i < n:
        start = i
        while i < n and alpha[i] > 0:
            i += 1
        run = alpha[start:i]
        zstart = i
        while i < n and alpha[i] == 0:
            i += 1
        z = i - zstart
        c = pos
        d = c + sum(run)
        blocks.append((run, z))
        positions.append((c, d))
        pos = d + z
    return BlockStructure(leading, tuple(blocks), tuple(positions))


def from_runs(zero_runs: Sequence[int], runs: Sequence[WeakComposition]) -> WeakComposition:
    """Inverse of :func:`block_structure` given ``len(zero_runs) == len(runs) + 1``."""
    if len(zero_runs) != len(runs) + 1:
        raise ValueError("need exactly one more zero run than positive runs")
    out = [0] * zero_runs[0]
    for run, z in zip(runs, zero_runs[1:]):
        out.extend(run)
        out.extend([0] * z)
    return tuple(out)


def compositions(n: int) -> list[WeakComposition]:
    """All compositions of ``n`` (zero-free), by descent subsets of ``[n-1]``."""
    if n == 0:
        return [EMPTY]
    out = []
    for r in range(n):
        for ds in itertools.combinations(range(1, n), r):
            out.append(composition_from_descents(n, ds))
    return sorted(out, key=sort_key)


def coarsenings(mu: WeakComposition) -> list[WeakComposition]:
    """All compositions obtained by merging consecutive parts of ``mu``."""
    if not mu:
        return [EMPTY]
    out = []
    k = len(mu)
    for r in range(k):
        for cuts in itertools.combinations(range(1, k), r):
            bounds = (0,) + cuts + (k,)
            out.append(tuple(sum(mu[a:b]) for a, b in zip(bounds, bounds[1:])))
    return out


def refinements_of_composition(mu: WeakComposition) -> list[WeakComposition]:
    """All compositions ``nu`` of ``|mu|`` with ``D(nu) ⊇ D(mu)``."""
    n = sum(mu)
    d = descent_set(mu)
    free = [i for i in range(1, n) if i not in d]
    out = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            out.append(composition_from_descents(n, d | set(extra)))
    return out


# -- refinement order ----------------------------------------------------------------


def _align(beta: WeakComposition, alpha: WeakComposition):
    """Cut ``beta`` along the blocks of ``alpha``.

    Returns ``(js, nus)`` where ``js`` are the zero-run lengths of ``beta`` in
    block slots and ``nus`` the positive pieces, or ``None`` if the weights do
    not line up.
    """
    bs = block_structure(alpha)
    targets = [sum(r) for r in bs.runs]
    js, nus = [], []
    i, n = 0, len(beta)
    for t in targets:
        z = 0
        while i < n and beta[i] == 0:
            z += 1
            i += 1
        js.append(z)
        acc, piece = 0, []
        while acc < t:
            if i >= n or beta[i] == 0:
                return None
            acc += beta[i]
            piece.append(beta[i])
            i += 1
        if acc != t:
            return None
        nus.append(tuple(piece))
    z = 0
    while i < n and beta[i] == 0:
        z += 1
        i += 1
    if i != n:
        return None
    js.append(z)
    return js, nus


def refines(beta: WeakComposition, alpha: WeakComposition) -> bool:
    """``beta <= alpha`` in the refining order (``beta`` is below ``alpha``)."""
    if weight(beta) != weight(alpha):
        return False
    aligned = _align(beta, alpha)
    if aligned is None:
        return False
    js, nus = aligned
    bs = block_structure(alpha)
    iz = bs.zero_runs
    if any(j > i for j, i in zip(js, iz)):
        return False
    # a nonempty tail of zeros must survive, and an empty one stays empty
    if (iz[-1] == 0) != (js[-1] == 0):
        return False
    for nu, mu in zip(nus, bs.runs):
        if not descent_set(nu) >= descent_set(mu):
            return False
    return True


def lower_interval(alpha: WeakComposition) -> Iterator[tuple[WeakComposition, tuple[int, ...]]]:
    """Yield every ``beta <= alpha`` with its zero-run lengths ``(j_1..j_{k+1})``."""
    bs = block_structure(alpha)
    iz = bs.zero_runs
    choices = [range(0, i + 1) for i in iz[:-1]]
    tail = iz[-1]
    choices.append(range(1, tail + 1) if tail else range(0, 1))
    run_choices = [refinements_of_composition(mu) for mu in bs.runs]
    for js in itertools.product(*choices):
        for nus in itertools.product(*run_choices):
            yield from_runs(js, nus), js


# -- mutations ------------------------------------------------------------------------


def _cells(alpha: WeakComposition) -> tuple[int, ...]:
    """Cell layout: the owning part index for unit cells, ``-1`` for zeros."""
    out = []
    for idx, p in enumerate(alpha):
        if p == 0:
            out.append(-1)
        else:
            out.extend([idx] * p)
    return tuple(out)


def _segment(cells: tuple[int, ...], i: int, j: int) -> WeakComposition:
    out: list[int] = []
    prev = None
    for c in cells[i:j]:
        if c < 0:
            out.append(0)
            prev = None
        elif c == prev:
            out[-1] += 1
        else:
            out.append(1)
            prev = c
    return tuple(out)


@lru_cache(maxsize=None)
def _mutation_tables(alpha: WeakComposition):
    """Memoised suffix tables over cell gaps.

    ``counts[i]`` maps each suffix weight sequence to the number of
    decompositions of cells ``i..`` into segments with empty peak set.
    ``clean[i]`` holds the suffixes reachable without the forbidden pattern
    (a split part whose last piece alone makes a part 1 followed by a
    positive part).
    """
    cells = _cells(alpha)
    n = len(cells)
    counts: list[Counter] = [Counter() for _ in range(n + 1)]
    clean: list[set] = [set() for _ in range(n + 1)]
    counts[n][EMPTY] = 1
    clean[n].add(EMPTY)
    for i in range(n - 1, -1, -1):
        starts_inside = i > 0 and cells[i] >= 0 and cells[i - 1] == cells[i]
        for j in range(i + 1, n + 1):
            seg = _segment(cells, i, j)
            if peak_set(seg):
                continue
            w = sum(seg)
            holds_last_piece = starts_inside and (j == n or cells[j] != cells[i])
            forbidden_head = holds_last_piece and w == 1
            for suffix, mult in counts[j].items():
                counts[i][(w,) + suffix] += mult
            for suffix in clean[j]:
                if forbidden_head and suffix and suffix[0] > 0:
                    continue
                clean[i].add((w,) + suffix)
    return counts[0], frozenset(clean[0])


def mutation_decompositions(alpha: WeakComposition) -> dict[WeakComposition, int]:
    """Multiset ``{beta: n_{alpha beta}}`` over all mutations ``beta ⊴ alpha``."""
    counts, _ = _mutation_tables(tuple(alpha))
    return dict(counts)


def mutates_to(beta: WeakComposition, alpha: WeakComposition) -> bool:
    return beta in _mutation_tables(tuple(alpha))[0]


def vdash(beta: WeakComposition, alpha: WeakComposition) -> bool:
    """``beta ⊩ alpha``."""
    return beta in _mutation_tables(tuple(alpha))[1]


# -- canonical representatives -------------------------------------------------------------


@lru_cache(maxsize=None)
def canonical_form(alpha: WeakComposition) -> WeakComposition:
    """Deterministic representative of the class of ``alpha`` with the same
    zero runs, the same block weights and the same peak set."""
    alpha = tuple(alpha)
    n = total_weight(alpha)
    peaks = peak_set(alpha)
    bs = block_structure(alpha)
    runs = []
    for c, d in bs.positions:
        q = {x for x in peaks if c < x <= d}
        if d in q or d == n:
            desc = q | {d}
        else:
            p = max([x for x in q if x < d] + [c])
            desc = q | set(range(p + 1, d + 1))
        runs.append(tuple(b - a for a, b in zip([c] + sorted(desc)[:-1], sorted(desc))))
    tau = from_runs(bs.zero_runs, runs)
    if peak_set(tau) != peaks or block_structure(tau).zero_runs != bs.zero_runs or [
        sum(r) for r in block_structure(tau).runs
    ] != [sum(r) for r in bs.runs]:
        raise InternalInconsistency(f"canonical form {tau} of {alpha} left its class")
    return tau


def class_key(alpha: WeakComposition):
    """The invariants that determine the class of ``alpha``."""
    bs = block_structure(alpha)
    return bs.zero_runs, tuple(sum(r) for r in bs.runs), peak_set(alpha)


# -- enumeration ------------------------------------------------------------------------------


def enumerate_weak(n: int, max_zero_length: int) -> list[WeakComposition]:
    """All weak compositions of weight ``n`` with at most ``max_zero_length`` zeros."""
    out = []
    for mu in compositions(n):
        k = len(mu)
        for z in range(max_zero_length + 1):
            # distribute z zeros into the k+1 gaps around the parts of mu
            for gaps in _distributions(z, k + 1):
                out.append(from_runs(gaps, [(p,) for p in mu]))
    return sorted(set(out), key=sort_key)


def _distributions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _distributions(total - first, slots - 1):
            yield (first,) + rest


def by_total_weight(t: int) -> list[WeakComposition]:
    """All weak compositions of total weight exactly ``t``."""
    if t == 0:
        return [EMPTY]
    out = []

    def rec(remaining: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        acc.append(0)
        rec(remaining - 1, acc)
        acc.pop()
        for s in range(1, remaining + 1):
            acc.append(s)
            rec(remaining - s, acc)
            acc.pop()

    rec(t, [])
    return sorted(out, key=sort_key)


def up_to_total_weight(bound: int) -> list[WeakComposition]:
    out = []
    for t in range(bound + 1):
        out.extend(by_total_weight(t))
    return out


# -- text form ----------------------------------------------------------------------------------


def format_composition(alpha: WeakComposition) -> str:
    return ",".join(str(p) for p in alpha) if alpha else "e"


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos, self.expected = text, pos, expected
        super().__init__(f"parse error at position {pos} in {text!r}: expected {expected}")


def parse_composition(text: str) -> WeakComposition:
    """Parse ``"e"`` or comma-separated non-negative integers."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s == "e":
        return EMPTY
    if not s:
        raise ParseError(text, offset, "'e' or a non-negative integer")
    parts = []
    pos = offset
    for chunk in s.split(","):
        stripped = chunk.strip()
        lead = len(chunk) - len(chunk.lstrip())
        if not stripped.isdigit():
            bad = pos + lead
            for k, ch in enumerate(stripped):
                if not ch.isdigit():
                    bad = pos + lead + k
                    break
            raise ParseError(text, bad, "a non-negative integer")
        parts.append(int(stripped))
        pos += len(chunk) + 1
    return tuple(parts)
