"""Prefix ranking of a word and the Cartesian-style tree built from it.

Words are ordered by their periodic extensions, with the longer word
winning ties, so a square sits strictly below its root.  Ranking all
nonempty prefixes of a word by this order gives a permutation; for a
Lyndon word, the decreasing tree of that permutation (minus its final,
maximal entry), completed with the letters as leaves, reproduces the left
Lyndon tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .errors import DuplicateEntry, EmptySequence, InternalError, NotLyndon, SizeMismatch
from .lyndon import is_lyndon
from .omega import omega_cmp
from .trees import Leaf, MagmaTree, Node
from .words import Ordering, Word, ensure_nonempty

__all__ = [
    "PrefixStandard",
    "DecreasingTree",
    "prec_cmp",
    "prefix_standard_permutation",
    "decreasing_tree",
    "in_order_labels",
    "completion",
    "left_cartesian_tree",
    "left_cartesian_tree_via_prefixes",
]


def prec_cmp(u: Word, v: Word) -> Ordering:
    """Extension order refined by length: on ties the longer word is smaller.

    Distinct words never compare equal, so this is a strict total order.
    """
    c = omega_cmp(u, v)
    if c.outcome is not Ordering.EQUAL:
        return c.outcome
    if len(u.letters) != len(v.letters):
        return Ordering.LESS if len(u.letters) > len(v.letters) else Ordering.GREATER
    return Ordering.EQUAL


@dataclass(frozen=True)
class PrefixStandard:
    """Ranks of the nonempty prefixes of a word, read off by prefix length.

    sigma[i-1] is the rank (1-based) of the length-i prefix; inverse[r-1]
    is the length of the rank-r prefix, also known as the prefix array.
    """

    sigma: tuple[int, ...]
    inverse: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(1, n + 1)) or len(self.inverse) != n:
            raise ValueError("sigma must be a permutation of 1..n")
        for length, rank in enumerate(self.sigma, start=1):
            if self.inverse[rank - 1] != length:
                raise ValueError("inverse does not invert sigma")

    def __len__(self) -> int:
        return len(self.sigma)


def prefix_standard_permutation(w: Word) -> PrefixStandard:
    """Rank every nonempty prefix of w under prec_cmp."""
    ensure_nonempty(w)
    n = len(w.letters)
    by_rank = sorted(
        range(1, n + 1), key=cmp_to_key(lambda i, j: prec_cmp(w[:i], w[:j]))
    )
    sigma = [0] * n
    for rank, length in enumerate(by_rank, start=1):
        sigma[length - 1] = rank
    return PrefixStandard(tuple(sigma), tuple(by_rank))


@dataclass(frozen=True)
class DecreasingTree:
    """Binary tree of an injective integer sequence, largest label on top."""

    label: int
    left: "DecreasingTree | None" = None
    right: "DecreasingTree | None" = None

    def __post_init__(self) -> None:
        for child in (self.left, self.right):
            if child is not None and child.label >= self.label:
                raise ValueError("child labels must be strictly smaller than the parent")


def decreasing_tree(alpha: Sequence[int]) -> DecreasingTree:
    """Recursive construction: the maximum becomes the root, the rest recurse."""
    entries = tuple(alpha)
    if not entries:
        raise EmptySequence("an empty sequence has no decreasing tree")
    if len(set(entries)) != len(entries):
        raise DuplicateEntry(f"entries are not pairwise distinct: {entries}")
    return _build_decreasing(entries)


def _build_decreasing(entries: tuple[int, ...]) -> DecreasingTree | None:
    if not entries:
        return None
    i = entries.index(max(entries))
    return DecreasingTree(
        entries[i],
        _build_decreasing(entries[:i]),
        _build_decreasing(entries[i + 1:]),
    )


def in_order_labels(tree: DecreasingTree | None) -> tuple[int, ...]:
    """Left-to-right projection; inverts decreasing_tree."""
    if tree is None:
        return ()
    return in_order_labels(tree.left) + (tree.label,) + in_order_labels(tree.right)


def _internal_size(tree: DecreasingTree | None) -> int:
    if tree is None:
        return 0
    return _internal_size(tree.left) + 1 + _internal_size(tree.right)


def completion(skeleton: DecreasingTree, w: Word) -> MagmaTree:
    """The unique complete tree with the skeleton as its internal nodes.

    In-order positions interleave leaves and internal nodes, so a skeleton
    of n nodes needs exactly the n + 1 letters of w as leaves.
    """
    size = _internal_size(skeleton)
    if size != len(w.letters) - 1:
        raise SizeMismatch(
            f"skeleton has {size} nodes but the word has {len(w.letters)} letters"
        )
    return _complete(skeleton, w, 0)


def _complete(tree: DecreasingTree | None, w: Word, offset: int) -> MagmaTree:
    if tree is None:
        return Leaf(w[offset:offset + 1])
    split = offset + _internal_size(tree.left) + 1
    return Node(_complete(tree.left, w, offset), _complete(tree.right, w, split))


def left_cartesian_tree(w: Word) -> MagmaTree:
    """Complete the decreasing tree of the proper-prefix ranks of w.

    The whole word always ranks last, so its entry is dropped before
    building the skeleton; anything else means the ranking is broken.
    """
    if not is_lyndon(w):
        raise NotLyndon(f"{w.text()!r} is not a Lyndon word")
    if len(w.letters) == 1:
        return Leaf(w)
    ps = prefix_standard_permutation(w)
    if ps.sigma[-1] != len(w.letters):
        raise InternalError("a Lyndon word must rank above all its proper prefixes")
    skeleton = decreasing_tree(ps.sigma[:-1])
    return completion(skeleton, w)


def left_cartesian_tree_via_prefixes(w: Word) -> MagmaTree:
    """Same tree, built from the prefixes themselves instead of integer ranks.

    The recursion picks the prec-greatest proper prefix of each block and
    fills the gaps between prefix positions with letter leaves.
    """
    if not is_lyndon(w):
        raise NotLyndon(f"{w.text()!r} is not a Lyndon word")
    n = len(w.letters)
    if n == 1:
        return Leaf(w)

    def build(lo: int, hi: int) -> MagmaTree:
        # Prefix lengths lo..hi sit between leaves lo-1 and hi (0-based).
        if lo > hi:
            return Leaf(w[lo - 1:lo])
        top = lo
        for length in range(lo + 1, hi + 1):
            if prec_cmp(w[:length], w[:top]) is Ordering.GREATER:
                top = length
        return Node(build(lo, top - 1), build(top + 1, hi))

    return build(1, n - 1)
