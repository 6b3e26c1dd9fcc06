"""Labelled chains with barred letters and their rewriting into F and K terms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import compositions as wc
from .scalar import ibinom


class InvalidWord(ValueError):
    pass


@dataclass(frozen=True)
class PosetWord:
    """A chain read bottom to top; each letter is ``(label, barred)``."""

    letters: tuple[tuple[int, bool], ...]

    def __post_init__(self):
        labels = [lab for lab, _ in self.letters]
        if len(set(labels)) != len(labels):
            raise InvalidWord(f"labels must be distinct: {labels}")
        if any(lab < 1 for lab in labels):
            raise InvalidWord("labels must be positive")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"{lab}'" if barred else str(lab) for lab, barred in self.letters)

    def labels(self) -> tuple[int, ...]:
        return tuple(lab for lab, _ in self.letters)

    def shifted(self, barred_shift: int, plain_shift: int) -> "PosetWord":
        return PosetWord(
            tuple(
                (lab + (barred_shift if b else plain_shift), b) for lab, b in self.letters
            )
        )

    def reversed(self) -> "PosetWord":
        return PosetWord(self.letters[::-1])


def poset_word(alpha) -> PosetWord:
    """The chain ``C_1 P_1 C_2 P_2 ... C_{k+1}`` attached to ``alpha``.

    ``C_p`` holds the zeros before the ``p``-th positive part and is barred.
    Zeros are labelled ``1..l0`` left to right; the positive parts take the
    remaining labels, the last part getting the smallest ones.
    """
    alpha = tuple(alpha)
    nzero = wc.zero_length(alpha)
    positives = [s for s in alpha if s]
    starts = {}
    nxt = nzero + 1
    for q in range(len(positives) - 1, -1, -1):
        starts[q] = nxt
        nxt += positives[q]
    letters = []
    zero_label = 1
    q = 0
    for s in alpha:
        if s == 0:
            letters.append((zero_label, True))
            zero_label += 1
        else:
            letters.extend((starts[q] + t, False) for t in range(s))
            q += 1
    return PosetWord(tuple(letters))


def shuffles(u: PosetWord, v: PosetWord) -> Iterator[PosetWord]:
    """All ``binom(len(u)+len(v), len(u))`` interleavings of two words."""
    n, m = len(u), len(v)
    for positions in itertools.combinations(range(n + m), n):
        pos = set(positions)
        iu, iv = iter(u.letters), iter(v.letters)
        yield PosetWord(tuple(next(iu) if k in pos else next(iv) for k in range(n + m)))


def product_words(alpha, beta) -> tuple[PosetWord, PosetWord]:
    """The two relabelled chains whose shuffle expands ``X_alpha * X_beta``."""
    z_a, z_b = wc.zero_length(alpha), wc.zero_length(beta)
    left = poset_word(alpha).shifted(0, z_b)
    right = poset_word(beta).shifted(z_a, wc.total_weight(alpha))
    return left, right


# -- rewriting -------------------------------------------------------------------


def _runs(w: PosetWord):
    """Split into maximal barred / unbarred runs, returning ``(barred, labels)``."""
    out = []
    for barred, group in itertools.groupby(w.letters, key=lambda t: t[1]):
        out.append((barred, [lab for lab, _ in group]))
    return out


def _descent_composition(labels) -> tuple[int, ...]:
    parts = [1]
    for a, b in zip(labels, labels[1:]):
        if a > b:
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts) if labels else ()


def _check_separated(w: PosetWord):
    barred = [lab for lab, b in w.letters if b]
    plain = [lab for lab, b in w.letters if not b]
    if barred and plain and max(barred) > min(plain):
        raise InvalidWord(f"barred label {max(barred)} exceeds unbarred label {min(plain)}")


def _expand(w: PosetWord, barred_choices) -> dict:
    _check_separated(w)
    pieces = []
    for barred, labels in _runs(w):
        gamma = _descent_composition(labels)
        if barred:
            pieces.append(barred_choices(gamma))
        else:
            pieces.append([(gamma, 1)])
    out: dict = {}
    for combo in itertools.product(*pieces):
        key = tuple(itertools.chain.from_iterable(part for part, _ in combo))
        coeff = 1
        for _, c in combo:
            coeff *= c
        out[key] = out.get(key, 0) + coeff
    return {k: c for k, c in out.items() if c}


def _gamma_choices(gamma):
    n, ell = sum(gamma), len(gamma)
    return [((0,) * (n - j), (-1) ** j * ibinom(ell - 1, j)) for j in range(ell)]


def _lambda_choices(gamma):
    n, p = sum(gamma), len(wc.peak_set(gamma))
    return [((0,) * (n - 2 * k), (-1) ** k * ibinom(p, k)) for k in range(p + 1)]


def word_to_F_terms(w: PosetWord) -> dict:
    """``Γ(w)`` as ``{alpha: int}`` in the fundamental basis."""
    return _expand(w, _gamma_choices)


def word_to_K_raw_terms(w: PosetWord) -> dict:
    """``Λ(w)`` in the peak basis with keys exactly as the rewriting produces them."""
    return _expand(w, _lambda_choices)


def word_to_K_terms(w: PosetWord) -> dict:
    """``Λ(w)`` as ``{alpha: int}`` in the peak basis, keys canonicalised."""
    out: dict = {}
    for key, c in _expand(w, _lambda_choices).items():
        t = wc.canonical_form(key)
        out[t] = out.get(t, 0) + c
    return {k: c for k, c in out.items() if c}


def word_to_F(w: PosetWord):
    from .element import Element

    return Element("F", word_to_F_terms(w))


def word_to_K(w: PosetWord):
    from .element import Element

    return Element("K", word_to_K_terms(w))


def parse_word(text: str) -> PosetWord:
    """Parse space-separated labels; a trailing ``'`` marks a barred letter."""
    letters = []
    for tok in text.split():
        barred = tok.endswith("'")
        body = tok[:-1] if barred else tok
        if not body.isdigit():
            raise InvalidWord(f"bad letter {tok!r}")
        letters.append((int(body), barred))
    return PosetWord(tuple(letters))
