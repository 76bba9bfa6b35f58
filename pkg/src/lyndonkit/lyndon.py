"""Lyndon predicates, the nonincreasing factorization, and its end factors.

A nonempty word is Lyndon when it is strictly smaller than the right part
of every nontrivial split.  The predicate family below keeps the classical
split conditions and the extension-order conditions as separate entry
points so they can be played against each other in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import EmptySequence
from .words import OrderedAlphabet, Ordering, Word, ensure_nonempty, nontrivial_splits
from .omega import omega_cmp

__all__ = [
    "LyndonFactorization",
    "is_lyndon",
    "is_lyndon_via_suffixes",
    "is_lyndon_via_rotations",
    "is_lyndon_suffix_omega",
    "is_lyndon_prefix_omega",
    "lyndon_factorization",
    "first_lyndon_factor",
    "last_lyndon_factor",
    "enumerate_lyndon_words",
]


@dataclass(frozen=True)
class LyndonFactorization:
    """Factors of the unique nonincreasing factorization into Lyndon words."""

    factors: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise EmptySequence("a factorization has at least one factor")

    @property
    def word(self) -> Word:
        out = self.factors[0]
        for f in self.factors[1:]:
            out = out + f
        return out

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.factors)


def is_lyndon(w: Word) -> bool:
    """Every nontrivial split w = uv has u < v; single letters pass vacuously."""
    ensure_nonempty(w)
    ls = w.letters
    return all(ls[:i] < ls[i:] for i in range(1, len(ls)))


def is_lyndon_via_suffixes(w: Word) -> bool:
    """Variant split condition: w is smaller than each nontrivial proper suffix."""
    ensure_nonempty(w)
    ls = w.letters
    return all(ls < ls[i:] for i in range(1, len(ls)))


def is_lyndon_via_rotations(w: Word) -> bool:
    """Variant split condition: w is strictly smaller than each nontrivial rotation."""
    ensure_nonempty(w)
    ls = w.letters
    return all(ls < ls[i:] + ls[:i] for i in range(1, len(ls)))


def is_lyndon_suffix_omega(w: Word) -> bool:
    """Extension-order test over splits w = uv: w^ω below v^ω for every split.

    The companion form, u^ω below v^ω for every split, is evaluated as
    well; the two are interchangeable and any disagreement is a bug.
    """
    ensure_nonempty(w)
    whole = True
    parts = True
    for u, v in nontrivial_splits(w):
        whole = whole and omega_cmp(w, v).outcome is Ordering.LESS
        parts = parts and omega_cmp(u, v).outcome is Ordering.LESS
        if not whole and not parts:
            break
    assert whole == parts
    return whole


def is_lyndon_prefix_omega(w: Word) -> bool:
    """Extension-order test over prefixes: every nontrivial proper prefix is below w."""
    ensure_nonempty(w)
    return all(
        omega_cmp(w[:i], w).outcome is Ordering.LESS for i in range(1, len(w.letters))
    )


def lyndon_factorization(w: Word) -> LyndonFactorization:
    """The unique nonincreasing factorization into Lyndon words (Duval's scan)."""
    ensure_nonempty(w)
    ls = w.letters
    n = len(ls)
    factors: list[Word] = []
    i = 0
    while i < n:
        # Grow the window while ls[i:j] stays a prefix of a power of a
        # Lyndon word; k trails the position being matched against.
        j, k = i + 1, i
        while j < n and ls[k] <= ls[j]:
            k = i if ls[k] < ls[j] else k + 1
            j += 1
        step = j - k
        while i <= k:
            factors.append(w[i:i + step])
            i += step
    return LyndonFactorization(tuple(factors))


def first_lyndon_factor(w: Word) -> Word:
    """Leading factor, found as the shortest prefix whose extension dominates.

    Two independent prefix scans are run: against the whole word, and
    against the complementary suffix.  They must agree, and they stay away
    from the factorization routine on purpose.
    """
    ensure_nonempty(w)
    n = len(w.letters)
    against_whole = None
    against_rest = None
    for i in range(1, n + 1):
        p = w[:i]
        if against_whole is None and omega_cmp(p, w).outcome is not Ordering.LESS:
            against_whole = p
        if against_rest is None:
            rest = w[i:]
            if len(rest.letters) == 0 or omega_cmp(p, rest).outcome is not Ordering.LESS:
                against_rest = p
        if against_whole is not None and against_rest is not None:
            break
    assert against_whole is not None and against_whole == against_rest
    return against_whole


def last_lyndon_factor(w: Word) -> Word:
    """Final factor: the shortest nonempty suffix with the smallest extension.

    Scans suffixes directly so the result can be played against
    lyndon_factorization instead of being read off from it.
    """
    ensure_nonempty(w)
    best = w
    for start in range(1, len(w.letters)):
        s = w[start:]
        c = omega_cmp(s, best)
        if c.outcome is Ordering.LESS or (
            c.outcome is Ordering.EQUAL and len(s.letters) < len(best.letters)
        ):
            best = s
    return best


def enumerate_lyndon_words(alphabet: OrderedAlphabet, max_len: int) -> Iterator[Word]:
    """All Lyndon words of length at most max_len, in shortlex order.

    Successor generation: extend the current word periodically to the
    length bound, strip trailing top symbols, then bump the last letter.
    """
    top = len(alphabet.symbols) - 1
    found: list[tuple[int, ...]] = []
    cur = [0] if top >= 0 and max_len >= 1 else []
    while cur:
        found.append(tuple(cur))
        cur = [cur[i % len(cur)] for i in range(max_len)]
        while cur and cur[-1] == top:
            cur.pop()
        if cur:
            cur[-1] += 1
    found.sort(key=lambda t: (len(t), t))
    for tup in found:
        yield Word(alphabet, tup)
